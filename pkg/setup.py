from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Source-only install: the package falls back to the pure-Python kernels.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "facbal._kernels._ckern",
                ["src/facbal/_kernels/_ckern.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
