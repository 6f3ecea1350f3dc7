"""Build script for the optional compiled kernel extension.

The package is fully functional without the extension: trisolve._backend
falls back to the pure-Python kernels when the compiled module is missing,
so a plain-Python environment can still install and use trisolve.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/trisolve/_kernels.pyx",
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
