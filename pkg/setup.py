"""Build the optional compiled kernels.

The package works without the extension (a pure-Python fallback is selected
at import time), so a failed Cython build only costs speed.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "newtonsing._speedups",
                ["src/newtonsing/_speedups.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    import sys

    print(f"newtonsing: building without compiled kernels ({exc})", file=sys.stderr)

setup(ext_modules=ext_modules)
