"""CMake bridge so `pip install .` builds the pybind11 extension.

The C++ core, CLI and tests build with plain CMake; this only wires the
`_core` extension into a wheel.
"""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        source_dir = Path(__file__).resolve().parent
        ext_path = Path(self.get_ext_fullpath(ext.name)).resolve()
        # the module must land inside the deltacomb package directory
        package_dir = ext_path.parent

        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={package_dir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DDELTACOMB_WHEEL_BUILD=ON",
            "-DCMAKE_BUILD_TYPE=Release",
        ]
        subprocess.run(["cmake", str(source_dir), *cmake_args], cwd=build_dir, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "--parallel",
             str(os.cpu_count() or 2)],
            cwd=build_dir,
            check=True,
        )


setup(
    packages=["deltacomb"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("deltacomb._core")],
    cmdclass={"build_ext": CMakeBuild},
)
