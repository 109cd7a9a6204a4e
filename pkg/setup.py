import os

from setuptools import Extension, setup

# The compiled kernel is optional: if Cython or a C compiler is missing the
# package falls back to conjsep._pykernel at import time.
ext_modules = []
if os.environ.get("CONJSEP_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("conjsep._ckernel", ["src/conjsep/_ckernel.pyx"])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
