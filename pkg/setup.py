"""Build script: compiles the optional C kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time), so compilation failures degrade the install instead of
breaking it.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("TAMILSPELL_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "tamilspell._kernels._speedups",
                    ["src/tamilspell/_kernels/_speedups.pyx"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
