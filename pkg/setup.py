"""Build the optional compiled state-sum kernel.

Without Cython (or a C compiler) the package installs pure Python and
``ratknot.kernels`` falls back to ``ratknot._kernels_py``.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("ratknot._kernels", ["src/ratknot/_kernels.pyx"], extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
