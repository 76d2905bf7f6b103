from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; vtpoly falls back at import time
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("vtpoly._kernel", ["src/vtpoly/_kernel.pyx"],
                   extra_compile_args=["-O3"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
