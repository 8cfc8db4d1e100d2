from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext_modules = [
    Pybind11Extension(
        "qwalk._core",
        sources=[
            "bindings/module.cpp",
            "src/state.cpp",
            "src/single.cpp",
            "src/pair.cpp",
            "src/measure.cpp",
        ],
        include_dirs=["include"],
        cxx_std=20,
    ),
]

setup(ext_modules=ext_modules, cmdclass={"build_ext": build_ext})
