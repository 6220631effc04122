"""Build script: compiles the optional distance-kernel extension when Cython is present.

The package works without the extension (a pure-Python fallback is selected at
import time), so a missing Cython or a failed compile only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("tgv._speedups", ["src/tgv/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
