"""Builds the pybind11 extension by delegating to the repository's CMake
project, so the python module and the C++ library can never drift apart.
Use `pip install -e . --no-build-isolation` for development installs.
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
        ext_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_temp = Path(self.build_temp).resolve() / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DCMAKE_LIBRARY_OUTPUT_DIRECTORY={ext_dir}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DNLDIRAC_BUILD_PYTHON=ON",
            "-DCMAKE_BUILD_TYPE=Release",
        ]
        subprocess.run(
            ["cmake", "-S", str(source_dir), "-B", str(build_temp), *cmake_args],
            check=True,
        )
        subprocess.run(
            [
                "cmake",
                "--build",
                str(build_temp),
                "--target",
                "_nldirac",
                "--parallel",
                str(os.cpu_count() or 2),
            ],
            check=True,
        )


setup(
    ext_modules=[CMakeExtension("nldirac._nldirac")],
    cmdclass={"build_ext": CMakeBuild},
)
