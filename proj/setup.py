"""CMake-driven build of the gstlib._core extension."""

import os
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
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        out_dir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        out_dir.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        subprocess.run(
            [
                "cmake",
                str(source_dir),
                f"-DCMAKE_BUILD_TYPE={cfg}",
                "-DGST_BUILD_PYTHON=ON",
                f"-DPython_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core",
             "--parallel", str(os.cpu_count() or 2)],
            cwd=build_dir,
            check=True,
        )
        built = list((build_dir / "python" / "gstlib").glob("_core*"))
        if not built:
            raise RuntimeError("CMake did not produce the _core module")
        self.copy_file(built[0], out_dir / built[0].name)


setup(
    ext_modules=[CMakeExtension("gstlib._core")],
    cmdclass={"build_ext": CMakeBuild},
)
