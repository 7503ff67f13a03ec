from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython: install the pure-Python package; the kernel module
    # falls back to lcnsyn._kernel_py at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("lcnsyn._kernel_cy", ["src/lcnsyn/_kernel_cy.pyx"])],
        language_level="3",
    )

setup(ext_modules=ext_modules)
