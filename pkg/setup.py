"""Build hooks for the optional compiled kernel.

The package never requires the extension at runtime: hooklab._backend
falls back to the pure Python kernel when hooklab._accel is missing, so
a failed compile only costs speed, not correctness.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    accel = Extension(
        "hooklab._accel",
        sources=["src/hooklab/_accel.pyx"],
        optional=True,
    )
    ext_modules = cythonize([accel], language_level="3")

setup(ext_modules=ext_modules)
