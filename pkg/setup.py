"""Build script for the optional compiled kernels.

The package is pure Python except for lexigap._kernels._speedups, which
holds the edit-distance inner loop. If Cython or a C compiler is missing
the build falls back to the pure-Python kernels without failing.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Never fail the install over the speedup extension."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing or broken
            self._skip(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._skip(exc)

    @staticmethod
    def _skip(exc):
        print(f"warning: building lexigap._kernels._speedups failed ({exc}); "
              "falling back to the pure-Python kernels")


ext_modules = []
if not os.environ.get("LEXIGAP_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("lexigap._kernels._speedups",
                       ["src/lexigap/_kernels/_speedups.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
