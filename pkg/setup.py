from setuptools import Extension, setup

# The compiled kernel is an optional accelerator: if Cython is missing the
# package still installs and falls back to the pure-Python backend.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("flagbound._fastcore", ["src/flagbound/_fastcore.pyx"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
