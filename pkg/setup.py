import os

from setuptools import Extension, setup

# The compiled kernel only accelerates word matching; the package runs fine
# without it (pathalg.kernels falls back to the pure-Python implementation).
ext_modules = []
if os.environ.get("PATHALG_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("pathalg._speedups", ["src/pathalg/_speedups.pyx"])],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
