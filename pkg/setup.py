from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "liesect._kernels",
                ["src/liesect/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # Pure-Python fallback in liesect._kernels_py is selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
