"""Build script: compiles the optional GF(2) kernel extension.

The extension is marked optional; when no C toolchain is available the
package installs anyway and falls back to the pure-Python kernels at
import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "vmkit._kernels._fastcore",
                ["src/vmkit/_kernels/_fastcore.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
