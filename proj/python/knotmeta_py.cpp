#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotmeta/apoly.hpp"
#include "knotmeta/cli.hpp"
#include "knotmeta/knotdata.hpp"
#include "knotmeta/metabelian.hpp"
#include "knotmeta/riley.hpp"

namespace py = pybind11;
using namespace knotmeta;

namespace {

py::int_ to_py(const Int& v) { return py::int_(py::str(v.get_str())); }

IntMat to_intmat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Int>> r;
  for (const auto& row : rows) r.emplace_back(row.begin(), row.end());
  return IntMat::from_rows(r);
}

// Integer coefficients, constant term first.
std::vector<py::int_> int_coeffs(const UniPoly& p) {
  std::vector<py::int_> out;
  for (const auto& c : p.coeffs()) out.push_back(to_py(c.re().get_num()));
  return out;
}

py::dict section_dict(long p, long q) {
  const RileySection s = section_at_minus_one(TwoBridge(p, q));
  py::dict d;
  d["phi"] = int_coeffs(s.phi);
  d["w11"] = int_coeffs(s.w11);
  d["w12"] = int_coeffs(s.w12);
  d["degree"] = s.roots_count;
  d["distinct_roots"] = s.distinct_roots;
  d["squarefree"] = s.squarefree;
  d["phi_t"] = riley_polynomial(TwoBridge(p, q)).to_t_string();
  return d;
}

py::dict verify_dict(long p, long q, bool general_t) {
  const TwoBridge k(p, q);
  const RelatorReport rel = verify_relator_mod_phi(k);
  const LongitudeReport lon = verify_longitude_mod_phi(k);
  py::dict d;
  d["relator_ok"] = rel.ok;
  d["longitude"] = identity_kind_name(lon.kind);
  d["longitude_ok"] = lon.ok;
  if (general_t) d["relator_general_t_ok"] = verify_relator_general_t(k).ok;
  return d;
}

// Runs a CLI command with JSON output; returns (exit code, stdout, stderr).
py::tuple run_json(const std::string& command, std::optional<std::string> input, std::optional<long> p,
                   std::optional<long> q, std::optional<long> p_max, bool general_t, bool small) {
  cli::RunConfig cfg;
  const auto c = cli::parse_command(command);
  if (!c) throw py::value_error("unknown command " + command);
  cfg.command = *c;
  if (input) cfg.input_path = *input;
  cfg.p = p;
  cfg.q = q;
  cfg.p_max = p_max;
  cfg.general_t = general_t;
  cfg.small_flag = small;
  cfg.format = cli::Format::kJson;
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cli::run(cfg, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact metabelian census, Riley polynomials and A-polynomial checks";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<RileyError>(m, "RileyError", PyExc_RuntimeError);

  m.def("seifert_determinant", [](const std::vector<std::vector<long>>& v) {
    return to_py(determinant_of_knot(SeifertKnot("V", to_intmat(v))));
  }, py::arg("V"));
  m.def("count_metabelian", [](long det) { return to_py(count_metabelian(Int(det))); }, py::arg("det"));
  m.def("enumerate_metabelian", [](const std::vector<std::vector<long>>& v) {
    std::vector<std::vector<std::string>> out;
    for (const auto& c : enumerate_metabelian(SeifertKnot("V", to_intmat(v)))) {
      out.emplace_back();
      for (const auto& t : c.thetas().thetas()) out.back().push_back(rat_str(t));
    }
    return out;
  }, py::arg("V"), "Class representatives as lists of \"num/den\" strings.");
  m.def("riley_section", &section_dict, py::arg("p"), py::arg("q"));
  m.def("verify_two_bridge", &verify_dict, py::arg("p"), py::arg("q"), py::arg("general_t") = false);
  m.def("cross_check", [](long p, long q) {
    const CrossCheckReport r = cross_check_counts(TwoBridge(p, q));
    py::dict d;
    d["riley_degree"] = r.riley_degree;
    d["distinct_roots"] = r.distinct_roots;
    d["meta_count"] = to_py(r.meta_count);
    d["half_p"] = r.half_p;
    d["ok"] = r.ok;
    return d;
  }, py::arg("p"), py::arg("q"));
  m.def("run_json", &run_json, py::arg("command"), py::arg("input") = py::none(), py::arg("p") = py::none(),
        py::arg("q") = py::none(), py::arg("p_max") = py::none(), py::arg("general_t") = false,
        py::arg("small") = false);
}
