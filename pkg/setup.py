"""Build script: compiles the optional quadrature extension.

The compiled core is an accelerator only; the package falls back to the pure
NumPy implementation in ``fraclangevin._quadcore_py`` when the extension is
missing.  Set FRACLANGEVIN_PURE_PYTHON=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("FRACLANGEVIN_PURE_PYTHON"):
    try:
        import numpy
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "fraclangevin._quadcore",
                    ["src/fraclangevin/_quadcore.pyx"],
                    include_dirs=[numpy.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                )
            ],
            language_level="3",
        )
    except ImportError:
        # No Cython available: pure-Python install.
        ext_modules = []

setup(ext_modules=ext_modules)
