import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("ENTX_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        extensions = cythonize(
            [Extension("entx._kernels._core", ["src/entx/_kernels/_core.pyx"])],
            compiler_directives={"language_level": 3},
        )

setup(ext_modules=extensions)
