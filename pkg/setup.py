from setuptools import Extension, setup

# The palindromic-length kernel is compiled when Cython is available; the
# package falls back to the pure-Python kernel otherwise.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("sturmian._palengine", ["src/sturmian/_palengine.pyx"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
