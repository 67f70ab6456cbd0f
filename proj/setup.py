"""Build the rofbench._core extension with setuptools + pybind11.

The C++ build for the CLI and tests stays on CMake; this only compiles the
same sources into the Python extension so `pip install .` needs nothing
beyond setuptools and pybind11.
"""

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

SOURCES = [
    "bindings/module.cpp",
    "src/dimensioning.cpp",
    "src/powermodel.cpp",
    "src/fft.cpp",
    "src/qam.cpp",
    "src/dsp.cpp",
    "src/optics.cpp",
    "src/scenario.cpp",
    "src/harness.cpp",
    "src/waveform_io.cpp",
]

ext = Pybind11Extension(
    "rofbench._core",
    SOURCES,
    include_dirs=["include", "vendor"],
    libraries=["fftw3"],
    cxx_std=20,
)

setup(
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
