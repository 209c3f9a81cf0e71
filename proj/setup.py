from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "hammock._hammock",
    sources=[
        "python/bindings.cpp",
        "src/lattice.cpp",
        "src/duality.cpp",
        "src/polynomial.cpp",
        "src/report.cpp",
        "src/verification.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
