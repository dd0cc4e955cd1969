from setuptools import Extension, setup

# The compiled kernel is optional: without Cython (or a C compiler) the
# package falls back to the pure-Python twin in bivar._kernel_py.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "bivar._kernel",
                ["src/bivar/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
