from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("vcew._kernel", ["src/vcew/_kernel.pyx"])],
        compiler_directives={"language_level": "3", "boundscheck": False, "wraparound": False},
    )
except ImportError:
    # No Cython at build time: the package falls back to the pure-Python
    # kernel at import, so a source-only install still works.
    extensions = []

setup(ext_modules=extensions)
