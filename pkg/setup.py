"""Build hook for the optional compiled kernel.

The Monte Carlo hot loop lives in ``flagbridge/_kernel.pyx``. If Cython or a
C compiler is unavailable, or FLAGBRIDGE_PURE=1 is set, the package installs
without the extension and falls back to the pure-Python kernel at import
time. Both kernels produce bit-identical results; the extension is only a
speedup.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("FLAGBRIDGE_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/flagbridge/_kernel.pyx"],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
