"""Build script: compiles the optional exact-linear-algebra kernels.

The package is fully functional without the extension; any build failure
falls back to the pure-Python kernels selected at import time.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler and the like
            print(f"skipping compiled kernels ({exc}); using pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"skipping {ext.name} ({exc}); using pure Python")


extensions = []
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("designideal._speedups", ["src/designideal/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("Cython not available; using pure-Python kernels")

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
