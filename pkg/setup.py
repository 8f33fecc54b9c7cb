"""Build script for the optional compiled search kernels.

The package works without the extension; ``perfham._backend`` falls back to
the pure-Python kernels when ``perfham._kernels`` cannot be imported.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("PERFHAM_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "perfham._kernels",
                    ["src/perfham/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
