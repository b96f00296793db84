import os

from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or a C compiler) the
# package installs anyway and falls back to the pure-Python kernels.
ext_modules = []
if not os.environ.get("GAPPARTS_SKIP_EXTENSION"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "gapparts._kernels",
                    ["src/gapparts/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
