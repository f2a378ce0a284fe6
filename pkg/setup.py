"""Build script: compiles the row-reduction kernel when Cython is available.

The package works without the extension (a numpy fallback is selected at
import time), so a missing compiler or Cython only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("coringlab._rowred", ["src/coringlab/_rowred.pyx"])],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"coringlab: building without compiled kernel ({exc})")
    ext_modules = []

setup(ext_modules=ext_modules)
