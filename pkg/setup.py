import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("EMPTY4_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "empty4._kernel",
                    ["src/empty4/_kernel.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython around: ship the pure-Python kernel only
        ext_modules = []

setup(ext_modules=ext_modules)
