from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [Extension("poscat._kernels", ["src/poscat/_kernels.pyx"])],
        language_level=3,
    )
)
