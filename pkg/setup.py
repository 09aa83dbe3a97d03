import os

from setuptools import Extension, setup

# The compiled kernel is optional: the package falls back to the pure-Python
# implementation in chisign.permgrp._kernel_py when the extension is absent.
ext_modules = []
if not os.environ.get("CHISIGN_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "chisign.permgrp._kernel",
                    ["src/chisign/permgrp/_kernel.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
