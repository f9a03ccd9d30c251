import os

from setuptools import Extension, setup

# The compiled rank kernel is optional: the package falls back to the pure
# Python implementation when the extension is missing or TFGOR_NO_EXT=1.
ext_modules = []
if os.environ.get("TFGOR_NO_EXT", "") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("tfgor._fastrank", ["src/tfgor/_fastrank.pyx"], optional=True)],
            language_level=3,
        )

setup(ext_modules=ext_modules)
