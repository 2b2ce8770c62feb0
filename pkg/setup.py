"""Build hook for the optional compiled Jacobi kernel.

The extension accelerates the eigensolver's inner sweep; when Cython or a
C compiler is unavailable the install still succeeds and the package
falls back to the pure-Python kernel at import time.
"""

import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing toolchain
            warnings.warn(f"skipping compiled kernel build: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            warnings.warn(f"skipping compiled kernel {ext.name}: {exc}")


try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("fockrank._jacobi_cy", ["src/fockrank/_jacobi_cy.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3,
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
