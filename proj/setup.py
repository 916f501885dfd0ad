import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

here = os.path.abspath(os.path.dirname(__file__))
sources = ["python/bindings.cpp"] + [
    os.path.join("src", f) for f in sorted(os.listdir(os.path.join(here, "src")))
    if f.endswith(".cpp")
]

ext = Pybind11Extension(
    "cdg._cdg",
    sources,
    include_dirs=[os.path.join(here, "include"), os.path.join(here, "vendor")],
    cxx_std=20,
    define_macros=[("CDG_DATA_DIR", '"' + os.path.join(here, "data") + '"')],
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
