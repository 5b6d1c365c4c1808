from setuptools import Extension, setup

# The compiled convolution kernels are optional: the package falls back to a
# numpy implementation when the extension is missing (see coadapt.kernels).
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    extensions = [
        Extension(
            "coadapt.kernels._conv_cy",
            ["src/coadapt/kernels/_conv_cy.pyx"],
            extra_compile_args=["-O3"],
            optional=True,
        )
    ]
    ext_modules = cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
