from setuptools import setup

# The compiled row-reduction kernel is optional: without Cython (or a C
# compiler) the package installs pure-Python and lefcon.kernel falls back
# to the reference implementation.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/lefcon/_rowreduce.pyx"],
        language_level="3",
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
