"""Build script: compiles the optional fast kernels when Cython is available.

The package is fully functional without the extension; ringlab.kernels
falls back to the pure-Python twin at import time. Build in place with

    python setup.py build_ext --inplace

The explicit package metadata below duplicates pyproject.toml only so
that legacy setuptools flows (no PEP 660 support) still install cleanly.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/ringlab/kernels/_ckernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
    for ext in ext_modules:
        ext.optional = True  # a failed compile degrades to the pure backend
except ImportError:
    pass

setup(
    name="ringlab",
    version="0.1.0",
    package_dir={"": "src"},
    packages=["ringlab", "ringlab.kernels"],
    ext_modules=ext_modules,
)
