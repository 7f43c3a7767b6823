#include "octodp/acceptance.hpp"
#include "octodp/catalog.hpp"
#include "octodp/discriminant.hpp"
#include "octodp/error.hpp"
#include "octodp/newton.hpp"
#include "octodp/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace octodp;

namespace {

// Rationals cross the boundary as strings ("-7/25"); the Python side turns
// them into fractions.Fraction.
ModuliVector moduli_arg(const std::vector<std::string>& d) {
  std::string joined;
  for (std::size_t i = 0; i < d.size(); ++i) joined += (i ? "," : "") + d[i];
  return ModuliVector::from_string(joined);
}

std::string ext(const ExtValuation& v) { return to_string(v); }

}  // namespace

PYBIND11_MODULE(_octodp, m) {
  m.doc() = "exact octanomial cubic surface toolkit";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  m.def("valuation", [](const std::string& q, long p) { return ext(valuation(parse_rational(q), Prime(p))); },
        py::arg("q"), py::arg("p"));
  m.def(
      "newton_root_valuations",
      [](const std::vector<std::optional<long>>& vals) {
        std::vector<ExtValuation> v;
        for (const auto& x : vals) v.push_back(x ? ExtValuation(*x) : ExtValuation::infinity());
        std::vector<std::string> out;
        for (const auto& r : newton_root_valuations(v)) out.push_back(to_string(r));
        return out;
      },
      "None stands for +infinity");
  m.def("coefficients", [](const std::vector<std::string>& d) {
    std::vector<std::string> out;
    for (const auto& c : coefficients_from_moduli(moduli_arg(d)).values) out.push_back(to_string(c));
    return out;
  });
  m.def("verify_parametrization", [](const std::vector<std::string>& d) { return verify_parametrization(moduli_arg(d)); });
  m.def("catalog", [] {
    std::vector<std::pair<std::string, std::vector<std::string>>> out;
    for (const auto& e : reference_catalog()) {
      std::vector<std::string> d;
      for (const auto& x : e.moduli) d.push_back(to_string(x));
      out.emplace_back(e.name, d);
    }
    return out;
  });

  // JSON reports, parsed on the Python side.
  m.def("build_json", [](const std::vector<std::string>& d) { return build_report(moduli_arg(d)).dump(); });
  m.def("classify_json", [](const std::vector<std::string>& d, long p, bool trees) {
    py::gil_scoped_release release;
    return classification_report(classify_moduli(moduli_arg(d), Prime(p)), trees).dump();
  }, py::arg("d"), py::arg("p") = 5, py::arg("trees") = false);
  m.def("lines_json", [](const std::vector<std::string>& d) { return census_report(full_census(moduli_arg(d))).dump(); });
  m.def("schlafli_dot", [](const std::vector<std::string>& d) { return schlafli_dot(full_census(moduli_arg(d))); });
  m.def("triangulations_json", [] {
    py::gil_scoped_release release;
    return triangulation_census_report().dump();
  });
  m.def("blowdown_json", [](const std::vector<std::string>& d) { return roundtrip_report(roundtrip_check(moduli_arg(d))).dump(); });
  m.def("sample_json", [](const std::string& target, std::uint64_t budget, std::uint64_t seed, long p, unsigned threads) {
    py::gil_scoped_release release;
    std::vector<std::string> out;
    for (const auto& f : search(SearchTarget::parse(target), budget, seed, Prime(p), threads)) out.push_back(finding_report(f).dump());
    return out;
  }, py::arg("target"), py::arg("budget"), py::arg("seed") = 1, py::arg("p") = 5, py::arg("threads") = 0);
  m.def("verify", [](const std::vector<int>& only) {
    AcceptanceOptions opt;
    opt.only.insert(only.begin(), only.end());
    std::vector<std::tuple<int, std::string, bool, std::string>> out;
    {
      py::gil_scoped_release release;
      for (const auto& r : run_acceptance(opt)) out.emplace_back(r.id, r.name, r.pass, r.detail);
    }
    return out;
  }, py::arg("only") = std::vector<int>{});
}
