"""Build the seqcomp package: a pure-python shim over the CMake-built _core.

The C++ library and the pybind11 module are compiled by the project's own
CMake tree; this file just drives `cmake` from setuptools so that
`pip install --no-build-isolation .` works.
"""

import shutil
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext):
        source_dir = Path(__file__).resolve().parent
        build_dir = Path(self.build_temp).resolve() / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)

        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        ext_path.parent.mkdir(parents=True, exist_ok=True)

        subprocess.run(
            [
                "cmake",
                "-S", str(source_dir),
                "-B", str(build_dir),
                "-DCMAKE_BUILD_TYPE=Release",
                "-DSEQCOMP_BUILD_TESTS=OFF",
                f"-DPython3_EXECUTABLE={sys.executable}",
                f"-DSEQCOMP_PYTHON_OUTPUT_DIR={ext_path.parent}",
            ],
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core", "--parallel"],
            check=True,
        )

        if not ext_path.exists():
            # ABI suffix mismatch fallback: take whatever _core.*.so CMake made.
            candidates = sorted(ext_path.parent.glob("_core.*"))
            if not candidates:
                raise RuntimeError(f"cmake did not produce {ext_path}")
            shutil.copy2(candidates[0], ext_path)


setup(
    packages=["seqcomp"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("seqcomp._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
