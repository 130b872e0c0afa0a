from setuptools import Extension, setup

# The compiled kernels are optional: if Cython (or a C compiler) is missing,
# the package installs anyway and falls back to the pure-Python kernels.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "freeloop._kernels._fast",
                ["src/freeloop/_kernels/_fast.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
