#include <pybind11/pybind11.h>
PYBIND11_MODULE(_superexp, m) { m.doc() = "superexp"; }
