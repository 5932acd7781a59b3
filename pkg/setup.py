"""Build script for the optional compiled evaluation kernel.

If the Cython extension fails to build (no compiler, no Cython), the
package still installs and falls back to the pure-Python kernel at
import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class optional_build_ext(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing etc.
            print(f"WARNING: compiled kernel not built ({exc}); "
                  "using pure-Python fallback", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"WARNING: failed to build {ext.name} ({exc}); "
                  "using pure-Python fallback", file=sys.stderr)


extensions = [
    Extension(
        "navmin._speedups",
        ["src/navmin/_speedups.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(
        extensions, compiler_directives={"language_level": "3"}
    ) if cythonize else [],
    cmdclass={"build_ext": optional_build_ext},
)
