"""Build the optional Cython kernels; the package still installs without them."""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            sys.stderr.write(f"warning: compiled kernels not built ({exc}); using pure Python\n")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            sys.stderr.write(f"warning: {ext.name} not built ({exc}); using pure Python\n")


ext_modules = []
if not os.environ.get("MOTZETA_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("motzeta._ckernels", ["src/motzeta/_ckernels.pyx"])],
            compiler_directives={"language_level": 3},
        )

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
