"""Build script: compiles the optional speedup extension when Cython is present.

The package is fully functional without the extension; `doccloud._accel`
falls back to the pure-Python kernels at import time. Set DOCCLOUD_PURE=1
to skip the compilation entirely.
"""

import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("DOCCLOUD_PURE"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "doccloud._speedups",
        sources=["src/doccloud/_speedups.pyx"],
        optional=True,
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
