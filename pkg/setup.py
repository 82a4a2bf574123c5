"""Build the optional compiled series kernels.

The extension is optional: if Cython or a C compiler is missing, or the
build fails, the package installs without it and falls back to the
pure-Python kernels at import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing and similar
            print(f"warning: compiled kernels not built ({exc}); using pure Python",
                  file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); using pure Python",
                  file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    # no fast-math and no fused multiply-add, to keep results identical to the
    # pure-Python kernels
    ext = Extension("cubic_modular._ckernels", ["src/cubic_modular/_ckernels.pyx"],
                    extra_compile_args=["-O3", "-ffp-contract=off"])
    return cythonize([ext], language_level=3, quiet=True)


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
