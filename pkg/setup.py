"""Build script for the optional compiled determinant kernel.

The package is pure Python except for one hot spot: fraction-free integer
elimination inside every exact polynomial evaluation.  If Cython and a C
compiler are available the kernel is compiled; otherwise installation falls
back to the pure-Python implementation with identical semantics (selection
happens at import time in polyiso.determinant).
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/polyiso/_bareiss_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
