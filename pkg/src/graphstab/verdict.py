from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Mapping

from .graph import Question


@dataclass(frozen=True)
class Verdict:
    """Answer to one (parameter, question) query.

    ``witnesses`` are the elements that violate the property, sorted; they
    are edges ``(u, v)`` for edge and nonedge questions and vertex indices for
    vertex questions. ``detail`` maps every inspected element to its
    ``(value before, value after)`` pair when the decider computed values.
    """

    holds: bool
    witnesses: tuple = ()
    detail: Mapping[Hashable, tuple[int, int]] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.holds == bool(self.witnesses):
            raise ValueError("holds must be True exactly when there are no witnesses")


def verdict_from_changes(
    question: Question,
    elements: Iterable[Hashable],
    changed: Iterable[Hashable],
    detail: Mapping[Hashable, tuple[int, int]] | None = None,
) -> Verdict:
    """Fold a per-element sweep into a verdict for ``question``.

    ``changed`` holds the elements whose edit changes the parameter. For the
    stable/unfrozen pole those are the witnesses; for the critical/frozen pole
    the unchanged elements are.
    """
    changed = set(changed)
    if question.wants_change:
        bad = [x for x in elements if x not in changed]
    else:
        bad = [x for x in elements if x in changed]
    bad.sort()
    return Verdict(not bad, tuple(bad), detail)


def verdict_from_values(
    question: Question, before: int, after: Mapping[Any, int]
) -> Verdict:
    detail = {x: (before, a) for x, a in after.items()}
    changed = [x for x, a in after.items() if a != before]
    return verdict_from_changes(question, after.keys(), changed, detail)
