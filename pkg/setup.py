"""Build script: compiles the optional rational-kernel extension.

The package works without the extension (pure-Python kernels are selected
at import time), so a failed compile should not block installation.  Set
SYMLP_NO_EXTENSION=1 to skip the compile step entirely.
"""

import os
import sys

from setuptools import setup

ext_modules = []
if not os.environ.get("SYMLP_NO_EXTENSION"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/symlp/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # noqa: BLE001 - any build-chain failure degrades gracefully
        print(f"symlp: skipping compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
