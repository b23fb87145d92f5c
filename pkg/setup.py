"""Build script: compiles the optional exact-geometry extension.

The package is fully functional without the extension (a pure-Python kernel
with identical semantics is selected at import time); the extension only
speeds up the O(n^3) visibility computation.  Set POLYVIS_NO_EXT=1 to skip
compilation entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("POLYVIS_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "polyvis._kernels_c",
                    ["src/polyvis/_kernels_c.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
