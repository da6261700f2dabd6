"""Build hooks for the optional compiled kernel.

The package is pure Python plus one accelerator extension.  If Cython or a
C compiler is missing the build still succeeds and the library falls back
to the pure-Python kernel at import time.
"""

import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
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
        print(
            "WARNING: compiled kernel build failed (%s); "
            "falling back to the pure-Python kernel" % (exc,)
        )


def extensions():
    if os.environ.get("DERIVIMAGE_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("derivimage._kernel_c", ["src/derivimage/_kernel_c.pyx"])
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
