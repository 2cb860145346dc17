import os

from setuptools import setup

ext_modules = []
if os.environ.get("HOPFSHARP_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/hopfsharp/kernels/_ckern.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except Exception as exc:  # pragma: no cover - build environment dependent
        print(f"hopfsharp: skipping compiled kernels ({exc}); pure-Python fallback will be used")
        ext_modules = []

setup(ext_modules=ext_modules)
