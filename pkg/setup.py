"""Build script for the compiled gate-kernel extension.

The package works without the extension (a pure-numpy backend is selected at
import time), so a missing compiler or Cython only costs speed.
"""
from setuptools import Extension, setup

try:
    import numpy as np
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "qpaclearn._kernels_cy",
                ["src/qpaclearn/_kernels_cy.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
