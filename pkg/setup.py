import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("LCDMDS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("lcdmds._speedups", ["src/lcdmds/_speedups.pyx"])],
            language_level="3",
        )
    except ImportError:
        # No Cython: install pure-Python only, the kernel selector falls back.
        pass

setup(ext_modules=ext_modules)
