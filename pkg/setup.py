import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("GORCODES_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("gorcodes._kernels", ["src/gorcodes/_kernels.pyx"], extra_compile_args=["-O2"])],
            language_level="3",
        )

setup(ext_modules=ext_modules)
