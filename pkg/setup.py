"""Build script: compiles the optional modular-arithmetic kernels.

The package is pure Python plus one optional Cython extension.  If Cython
or a C compiler is unavailable the extension is skipped and the package
falls back to the pure-Python kernels at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [Extension("recseq._kernels_cy", ["src/recseq/_kernels_cy.pyx"])],
        language_level="3",
    )
    for ext in extensions:
        # a failed compile must not fail the install
        ext.optional = True

setup(ext_modules=extensions)
