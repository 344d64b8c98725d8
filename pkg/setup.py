"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time); building it just makes the hot DP kernels much faster.
"""
import os

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "bracketdyn._kernels_cy",
                ["src/bracketdyn/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "initializedcheck": False,
        },
    )
except ImportError:
    if os.environ.get("BRACKETDYN_REQUIRE_EXT"):
        raise

setup(ext_modules=ext_modules)
