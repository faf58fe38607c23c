"""Build script: compiles the optional Cython iteration kernel.

The package works without the extension (a pure-Python kernel is selected at
import time); building it makes long trajectory sweeps orders of magnitude
faster. Build in place with `pip install -e . --no-build-isolation`.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("gonosomal._itercore", ["src/gonosomal/_itercore.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
