from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("graphstab._ckernels", ["src/graphstab/_ckernels.pyx"])],
        compiler_directives={"language_level": 3},
    )

setup(ext_modules=ext_modules)
