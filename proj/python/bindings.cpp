// Python bindings. Reports cross the boundary as the same JSON documents the
// CLI prints; the package wrapper decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <set>
#include <sstream>

#include "ulmkit/acceptance.hpp"
#include "ulmkit/duality.hpp"
#include "ulmkit/error.hpp"
#include "ulmkit/io.hpp"
#include "ulmkit/ulm.hpp"

namespace py = pybind11;
using namespace ulmkit;

namespace {

std::vector<std::vector<std::int64_t>> sigma_rows(const ZModule& m) {
  std::vector<std::vector<std::int64_t>> rows(m.dim(), std::vector<std::int64_t>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m.sigma()(i, j);
  return rows;
}

ZModule module_from(Scalar ell, const std::vector<std::vector<std::int64_t>>& rows) {
  return ZModule(FpMatrix::from_rows(ell, rows));
}

}  // namespace

PYBIND11_MODULE(_ulmkit, m) {
  m.doc() = "finite F_l[[Z]]-modules, Ulm invariants and the local height simulator";

  static py::exception<Error> base(m, "UlmkitError", PyExc_ValueError);
  static py::exception<ParseError> parse_exc(m, "ParseError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_exc, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("parse_zmod",
        [](const std::string& text) {
          const ZModule z = io::parse_zmod(text);
          return py::make_tuple(z.ell(), sigma_rows(z));
        },
        py::arg("text"), "parse .zmod text into (l, sigma rows)");
  m.def("ulm_json",
        [](Scalar ell, const std::vector<std::vector<std::int64_t>>& sigma) {
          return io::ulm_json(ulm::ulm_invariants(module_from(ell, sigma))).dump();
        },
        py::arg("ell"), py::arg("sigma"));
  m.def("decompose_json",
        [](Scalar ell, const std::vector<std::vector<std::int64_t>>& sigma) {
          return io::decomposition_json(ulm::decompose(module_from(ell, sigma))).dump();
        },
        py::arg("ell"), py::arg("sigma"));
  m.def("dual_sigma",
        [](Scalar ell, const std::vector<std::vector<std::int64_t>>& sigma) {
          return sigma_rows(duality::dualize(module_from(ell, sigma)));
        },
        py::arg("ell"), py::arg("sigma"));
  m.def("cyclic_sigma",
        [](Scalar ell, std::int64_t n) { return sigma_rows(make_cyclic(ell, n)); },
        py::arg("ell"), py::arg("n"));
  m.def("spectrum_json",
        [](std::uint64_t ell, std::uint64_t bound, bool detailed) {
          return io::spectrum_json(arith::ulm_spectrum(arith::CycloContext(ell), bound), detailed)
              .dump();
        },
        py::arg("ell"), py::arg("bound"), py::arg("detailed") = false);
  m.def("char_height_json",
        [](std::uint64_t ell, const std::set<std::uint64_t>& ramified, std::size_t mm) {
          arith::CharacterSpec spec(arith::CycloContext(ell), ramified, mm);
          return io::global_height_json(spec, arith::global_height(spec)).dump();
        },
        py::arg("ell"), py::arg("ramified"), py::arg("m") = 1);
  m.def("present_json",
        [](Scalar ell, std::size_t n, const std::map<std::size_t, std::size_t>& mult,
           std::size_t free_mult, std::size_t trunc) {
          present::PresentationBudget b;
          b.ell = ell;
          b.max_level = n;
          b.mult = mult;
          b.free_mult = free_mult;
          b.trunc = trunc;
          return io::presentation_json(present::emit(b)).dump();
        },
        py::arg("ell"), py::arg("N"), py::arg("mult"), py::arg("free_mult") = 0,
        py::arg("trunc") = 1);
  m.def("selftest",
        [](int criterion, std::uint64_t seed) {
          py::gil_scoped_release release;
          const auto r = acceptance::run_one(criterion, seed);
          std::ostringstream os;
          acceptance::print(os, r);
          return std::make_pair(r.passed, os.str());
        },
        py::arg("criterion"), py::arg("seed") = 20240601);
}
