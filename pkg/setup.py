from setuptools import Extension, setup

# The merge-count kernel is optional: without Cython (or a compiler) the
# package falls back to the pure-Python implementation at import time.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "degcorr._kernels._inversions",
                ["src/degcorr/_kernels/_inversions.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
