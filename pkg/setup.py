"""Build script for the optional compiled search kernel.

The package works without the extension: rainbowpan.kernels falls back to
the pure-Python twin when the compiled module is absent.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("rainbowpan._kernel", ["src/rainbowpan/_kernel.pyx"])],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )

setup(ext_modules=ext_modules)
