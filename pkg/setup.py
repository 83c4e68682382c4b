"""Build hook for the optional compiled kernel.

The package is pure Python plus one Cython extension with the hot loops
(per-graph spectral scan, random-walk trials).  If Cython or a C compiler
is unavailable the extension is skipped and kemeny.kernel falls back to
the numpy implementation at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "kemeny._ckernel",
                ["src/kemeny/_ckernel.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
