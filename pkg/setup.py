"""Build script for the optional compiled kernels.

If Cython or a C++ compiler is unavailable the package installs without the
extension and falls back to ``knotfourier._kernels_py`` at import time.
"""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("KNOTFOURIER_NO_EXT"):
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "knotfourier._kernels",
                    ["src/knotfourier/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                    define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                    extra_compile_args=["-O3"],
                    language="c++",
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
