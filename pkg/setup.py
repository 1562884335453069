"""Build the optional compiled reduction kernel.

Without Cython (or a C compiler) the package installs pure Python and the
kernel falls back to ``rtalg.rewrite._kernel_py`` at import time.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("rtalg.rewrite._kernel_c", ["src/rtalg/rewrite/_kernel_c.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
