"""Build the optional Cython kernels.

A missing compiler or Cython leaves the package importable; the pure-Python
kernels are selected at import time instead.
"""

from setuptools import setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        ["src/sisotopy/_kernels/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # noqa: BLE001
            print(f"warning: compiled kernels not built ({exc}); using pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # noqa: BLE001
            print(f"warning: {ext.name} not built ({exc}); using pure Python")


setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
