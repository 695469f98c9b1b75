from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-python install; varextropy.kernels falls back to the numpy kernel.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "varextropy._kernels",
                ["src/varextropy/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
