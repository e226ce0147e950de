from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "muntzlab._core",
    sources=[
        "python/bindings.cpp",
        "src/exponents.cpp",
        "src/polynomial.cpp",
        "src/functional.cpp",
        "src/spikes.cpp",
        "src/c0.cpp",
        "src/octa.cpp",
        "src/json_io.cpp",
    ],
    include_dirs=["include", "vendor"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
