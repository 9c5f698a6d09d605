"""Build the optional compiled elimination kernels.

The package works without the extension (rtoric.kernels falls back to the
pure implementation), so the extension is marked optional: a missing compiler
or Cython must not break installation.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "rtoric._kernels_cy",
                ["src/rtoric/_kernels_cy.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
