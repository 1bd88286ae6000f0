"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a numpy fallback is selected at
import time), so any failure to cythonize or compile is non-fatal.
"""

import os
import platform

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    override = os.environ.get("APPBASIS_CFLAGS")
    if override is not None:
        compile_args = override.split()
    else:
        compile_args = ["-O3"]
        if platform.machine() in ("x86_64", "AMD64"):
            compile_args.append("-march=native")
    ext = Extension(
        "appbasis.kernels._cykernels",
        ["src/appbasis/kernels/_cykernels.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=compile_args,
    )
    ext_modules = cythonize([ext], compiler_directives={"language_level": "3"})
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"warning: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
