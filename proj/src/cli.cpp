#include "knotmeta/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "knotmeta/apoly.hpp"
#include "knotmeta/knotdata.hpp"
#include "knotmeta/metabelian.hpp"
#include "knotmeta/riley.hpp"

namespace knotmeta::cli {

using nlohmann::json;

namespace {

const std::map<std::string, Command>& command_table() {
  static const std::map<std::string, Command> t{
      {"det", Command::kDet},
      {"meta-count", Command::kMetaCount},
      {"meta-enum", Command::kMetaEnum},
      {"meta-verify", Command::kMetaVerify},
      {"tb-riley", Command::kTbRiley},
      {"tb-verify", Command::kTbVerify},
      {"tb-crosscheck", Command::kTbCrosscheck},
      {"apoly-analyze", Command::kApolyAnalyze},
      {"sweep", Command::kSweep},
  };
  return t;
}

// Reported to the user as a bad invocation (exit 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

json big(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json poly_coeffs(const UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.is_real() ? rat_str(c.re()) : c.to_string());
  return out;
}

json gauss_json(const GaussRat& z) {
  if (z.is_real()) return rat_str(z.re());
  return json{{"re", rat_str(z.re())}, {"im", rat_str(z.im())}};
}

std::string approx_str(const std::complex<double>& z) {
  char buf[64];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.12g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
  }
  return buf;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// RFC 4180 quoting; two-bridge names such as S(5,3) contain commas.
std::string csv_field(const std::string& f) {
  if (f.find_first_of(",\"\n") == std::string::npos) return f;
  std::string out = "\"";
  for (char ch : f) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::vector<KnotRecord> knots_from(const RunConfig& cfg) {
  if (cfg.input_path) return load_knots(*cfg.input_path);
  return {TwoBridge(*cfg.p, *cfg.q)};
}

std::vector<TwoBridge> two_bridge_from(const RunConfig& cfg) {
  std::vector<TwoBridge> out;
  for (auto& k : knots_from(cfg)) {
    if (auto* t = std::get_if<TwoBridge>(&k)) out.push_back(*t);
    else throw UsageError(knot_name(k) + ": command needs a two-bridge knot");
  }
  return out;
}

std::vector<SeifertKnot> seifert_from(const RunConfig& cfg) {
  if (!cfg.input_path) throw UsageError("command needs -i with Seifert-matrix records");
  std::vector<SeifertKnot> out;
  for (auto& k : load_knots(*cfg.input_path)) {
    if (auto* s = std::get_if<SeifertKnot>(&k)) out.push_back(*s);
    else throw UsageError(knot_name(k) + ": command needs a Seifert matrix");
  }
  return out;
}

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

// --- det / meta-count --------------------------------------------------------

int run_scalar(const RunConfig& cfg, std::ostream& out, bool census) {
  const auto knots = knots_from(cfg);
  const char* key = census ? "meta_count" : "det";
  std::vector<std::pair<std::string, Int>> rows;
  for (const auto& k : knots) {
    const Int d = determinant_of_knot(k);
    rows.emplace_back(knot_name(k), census ? count_metabelian(d) : d);
  }
  switch (cfg.format) {
    case Format::kJson: {
      json res = json::array();
      for (const auto& [n, v] : rows) res.push_back({{"name", n}, {key, big(v)}});
      emit_json(out, {{"command", command_name(cfg.command)}, {"results", res}});
      break;
    }
    case Format::kCsv:
      out << "name," << key << "\n";
      for (const auto& [n, v] : rows) out << csv_field(n) << "," << v.get_str() << "\n";
      break;
    case Format::kTable:
      if (rows.size() == 1) {
        out << rows[0].second.get_str() << "\n";
      } else {
        for (const auto& [n, v] : rows) out << n << "\t" << v.get_str() << "\n";
      }
      break;
  }
  return kExitOk;
}

// --- metabelian ----------------------------------------------------------------

json thetas_json(const RotationVector& t) {
  json a = json::array();
  for (const auto& x : t.thetas()) a.push_back(rat_str(x));
  return a;
}

int run_meta_enum(const RunConfig& cfg, std::ostream& out) {
  const auto knots = seifert_from(cfg);
  json res = json::array();
  std::ostringstream table, csv;
  csv << "name,index,thetas,order\n";
  for (const auto& k : knots) {
    const auto classes = enumerate_metabelian(k);
    json cj = json::array();
    table << k.name() << ": " << classes.size() << " class(es), det " << determinant_of_knot(k).get_str() << "\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      cj.push_back({{"thetas", thetas_json(c.thetas())}, {"order", big(c.order())}});
      table << "  " << c.thetas().to_string() << "  order " << c.order().get_str() << "\n";
      std::string th;
      for (const auto& x : c.thetas().thetas()) th += (th.empty() ? "" : " ") + rat_str(x);
      csv << csv_field(k.name()) << "," << i << "," << th << "," << c.order().get_str() << "\n";
    }
    res.push_back({{"name", k.name()},
                   {"det", big(determinant_of_knot(k))},
                   {"count", classes.size()},
                   {"classes", std::move(cj)}});
  }
  if (cfg.format == Format::kJson) emit_json(out, {{"command", "meta-enum"}, {"results", res}});
  else if (cfg.format == Format::kCsv) out << csv.str();
  else out << table.str();
  return kExitOk;
}

int run_meta_verify(const RunConfig& cfg, std::ostream& out) {
  const auto knots = seifert_from(cfg);
  bool all_ok = true;
  json res = json::array();
  std::ostringstream table;
  for (const auto& k : knots) {
    const auto classes = enumerate_metabelian(k);
    const Int expected = count_metabelian(determinant_of_knot(k));
    const bool count_ok = Int(static_cast<long>(classes.size())) == expected;
    all_ok = all_ok && count_ok;
    json cj = json::array();
    table << k.name() << ": " << classes.size() << " class(es), (det-1)/2 = " << expected.get_str()
          << (count_ok ? "  ok" : "  MISMATCH") << "\n";
    for (const auto& c : classes) {
      const ClassVerification v = verify_class(k, c);
      all_ok = all_ok && v.ok();
      cj.push_back({{"thetas", thetas_json(c.thetas())},
                    {"relation_ok", v.relation_ok},
                    {"irreducible_ok", v.irreducible_ok},
                    {"trace_free_ok", v.trace_free_ok},
                    {"sl2_ok", v.sl2_ok},
                    {"failures", v.failures}});
      table << "  " << c.thetas().to_string() << "  relation " << yes_no(v.relation_ok) << ", irreducible "
            << yes_no(v.irreducible_ok) << ", trace(mu)=0 " << yes_no(v.trace_free_ok) << "\n";
      for (const auto& f : v.failures) table << "    FAIL: " << f << "\n";
    }
    res.push_back({{"name", k.name()}, {"count", classes.size()}, {"expected", big(expected)},
                   {"count_ok", count_ok}, {"classes", std::move(cj)}});
  }
  if (cfg.format == Format::kJson) emit_json(out, {{"command", "meta-verify"}, {"ok", all_ok}, {"results", res}});
  else out << table.str();
  return all_ok ? kExitOk : kExitVerificationFailed;
}

// --- two-bridge ----------------------------------------------------------------

int run_tb_riley(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  bool all_ok = true;
  json res = json::array();
  std::ostringstream table;
  for (const auto& k : two_bridge_from(cfg)) {
    json j{{"name", k.name()}, {"p", k.p()}, {"q", k.q()}};
    const LaurentBiPoly phi_t = riley_polynomial(k);
    j["phi_t"] = phi_t.to_t_string();
    table << k.name() << "\n  phi(t,u) = " << phi_t.to_t_string() << "\n";
    try {
      const RileySection s = section_at_minus_one(k);
      j["phi"] = s.phi.to_string();
      j["phi_coeffs"] = poly_coeffs(s.phi);
      j["w11"] = s.w11.to_string();
      j["w12"] = s.w12.to_string();
      j["degree"] = s.roots_count;
      j["distinct_roots"] = s.distinct_roots;
      j["squarefree"] = s.squarefree;
      j["product_identity_ok"] = s.product_identity_ok;
      j["real_roots"] = sturm_real_root_count(s.phi);
      table << "  phi(-1,u) = " << s.phi.to_string() << "\n  w11(-1,u) = " << s.w11.to_string()
            << "\n  w12(-1,u) = " << s.w12.to_string() << "\n  degree " << s.roots_count << ", distinct roots "
            << s.distinct_roots << ", real roots " << j["real_roots"].get<long>() << ", squarefree "
            << yes_no(s.squarefree) << "\n";
      if (cfg.roots) {
        json approx = json::array();
        table << "  roots (approx):";
        for (const auto& z : approximate_roots(s.phi)) {
          approx.push_back(approx_str(z));
          table << " " << approx_str(z);
        }
        table << "\n";
        j["roots"] = {{"approx", approx}};
      }
    } catch (const RileyError& e) {
      all_ok = false;
      j["error"] = e.what();
      err << e.what() << "\n";
      table << "  FAIL: " << e.what() << "\n";
    }
    res.push_back(std::move(j));
  }
  if (cfg.format == Format::kJson) emit_json(out, {{"command", "tb-riley"}, {"ok", all_ok}, {"results", res}});
  else out << table.str();
  return all_ok ? kExitOk : kExitVerificationFailed;
}

std::string entry_name(int e) {
  static const char* names[] = {"(1,1)", "(1,2)", "(2,1)", "(2,2)"};
  return e < 0 ? "none" : names[e];
}

int run_tb_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  bool all_ok = true;
  json res = json::array();
  std::ostringstream table;
  for (const auto& k : two_bridge_from(cfg)) {
    json j{{"name", k.name()}, {"p", k.p()}, {"q", k.q()}};
    table << k.name() << "\n";
    try {
      const RelatorReport rel = verify_relator_mod_phi(k);
      const LongitudeReport lon = verify_longitude_mod_phi(k);
      j["relator_ok"] = rel.ok;
      j["relator_offending_entry"] = entry_name(rel.offending_entry);
      j["longitude"] = identity_kind_name(lon.kind);
      j["longitude_ok"] = lon.ok;
      j["trace_lambda"] = lon.trace.to_string();
      j["trace_mu"] = "0";
      bool ok = rel.ok && lon.ok;
      table << "  relator rho(w)rho(x1) = rho(x2)rho(w) mod phi: " << yes_no(rel.ok);
      if (!rel.ok) table << " (entry " << entry_name(rel.offending_entry) << ")";
      table << "\n  rho(lambda) mod phi: " << identity_kind_name(lon.kind) << ", trace " << lon.trace.to_string()
            << "\n  trace(rho(mu)) = 0 at t = -1\n";
      if (cfg.general_t) {
        const RelatorReport gen = verify_relator_general_t(k);
        j["relator_general_t_ok"] = gen.ok;
        table << "  relator over Q(t): " << yes_no(gen.ok) << "\n";
        ok = ok && gen.ok;
      }
      j["ok"] = ok;
      all_ok = all_ok && ok;
    } catch (const RileyError& e) {
      all_ok = false;
      j["ok"] = false;
      j["error"] = e.what();
      err << e.what() << "\n";
      table << "  FAIL: " << e.what() << "\n";
    }
    res.push_back(std::move(j));
  }
  if (cfg.format == Format::kJson) emit_json(out, {{"command", "tb-verify"}, {"ok", all_ok}, {"results", res}});
  else out << table.str();
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int run_tb_crosscheck(const RunConfig& cfg, std::ostream& out) {
  bool all_ok = true;
  json res = json::array();
  std::ostringstream table, csv;
  csv << "name,p,q,riley_deg,distinct_roots,meta_count,half_p,ok\n";
  for (const auto& k : two_bridge_from(cfg)) {
    const CrossCheckReport r = cross_check_counts(k);
    all_ok = all_ok && r.ok;
    res.push_back({{"name", k.name()}, {"p", k.p()}, {"q", k.q()}, {"riley_degree", r.riley_degree},
                   {"distinct_roots", r.distinct_roots}, {"meta_count", big(r.meta_count)}, {"half_p", r.half_p},
                   {"ok", r.ok}, {"failures", r.failures}});
    table << k.name() << ": deg phi(-1,u) = " << r.riley_degree << ", distinct roots = " << r.distinct_roots
          << ", metabelian census = " << r.meta_count.get_str() << ", (p-1)/2 = " << r.half_p << "\n  "
          << r.distinct_roots << " = " << r.meta_count.get_str() << " = " << r.half_p << (r.ok ? "  ok" : "  MISMATCH")
          << "\n";
    for (const auto& f : r.failures) table << "  FAIL: " << f << "\n";
    csv << csv_field(k.name()) << "," << k.p() << "," << k.q() << "," << r.riley_degree << "," << r.distinct_roots << ","
        << r.meta_count.get_str() << "," << r.half_p << "," << yes_no(r.ok) << "\n";
  }
  if (cfg.format == Format::kJson) emit_json(out, {{"command", "tb-crosscheck"}, {"ok", all_ok}, {"results", res}});
  else if (cfg.format == Format::kCsv) out << csv.str();
  else out << table.str();
  return all_ok ? kExitOk : kExitVerificationFailed;
}

// --- A-polynomials ---------------------------------------------------------------

json report_json(const AnalyzerReport& r) {
  json j{{"name", r.name},
         {"deg_l", r.deg_l},
         {"eval_at_i", r.eval_at_i.to_string("l")},
         {"eval_at_i_coeffs", poly_coeffs(r.eval_at_i)},
         {"k", r.k},
         {"has_vertical_edge", r.has_vertical_edge},
         {"warnings", r.warnings}};
  json hull = json::array();
  for (const auto& [m, l] : r.hull) hull.push_back({m, l});
  j["newton_polygon"] = hull;
  if (r.factors) {
    j["factor_profile"] = {{"l", r.factors->l_mult},
                           {"l_minus_1", r.factors->lm1_mult},
                           {"l_plus_1", r.factors->lp1_mult},
                           {"residual", r.factors->residual.to_string("l")}};
  } else {
    j["factor_profile"] = nullptr;
  }
  const DegreeBoundReport& b = r.bound;
  json bj{{"applicable", b.applicable}, {"deg_l", b.deg_l}, {"eval_deg_l", b.eval_deg_l},
          {"degrees_agree", b.degrees_agree}, {"pure_lm1_power", b.pure_lm1_power}, {"k", b.k},
          {"ok", b.ok}, {"failures", b.failures}, {"note", b.note}};
  if (b.bound) bj["bound"] = *b.bound;
  if (b.slack) bj["slack"] = *b.slack;
  if (b.exceeds_metabelian_count) bj["exceeds_metabelian_count"] = *b.exceeds_metabelian_count;
  j["degree_bound"] = bj;
  j["bound_ok"] = r.bound_ok ? json(*r.bound_ok) : json(nullptr);
  json crit = json::array();
  for (const auto& f : r.criteria) {
    json fj{{"kind", finding_kind_name(f.kind)}, {"message", f.message}};
    json om = json::array();
    for (const auto& o : f.omegas) {
      json oj{{"exact", o.exact}};
      if (o.value) oj["value"] = gauss_json(*o.value);
      if (o.trace) oj["trace_lambda"] = gauss_json(*o.trace);
      om.push_back(std::move(oj));
    }
    fj["omegas"] = om;
    if (f.residual_degree) fj["residual_degree"] = *f.residual_degree;
    crit.push_back(std::move(fj));
  }
  j["criteria"] = crit;
  if (r.probe) {
    j["multiplicity_probe"] = {{"k", r.probe->k}, {"bound", big(r.probe->bound)}, {"holds", r.probe->holds},
                               {"label", r.probe->label}};
  }
  return j;
}

void report_table(const AnalyzerReport& r, std::ostream& os) {
  os << r.name << "\n  deg_l A = " << r.deg_l << "\n  A(sqrt(-1), l) = " << r.eval_at_i.to_string("l") << "\n";
  if (r.factors)
    os << "  factor profile: l^" << r.factors->l_mult << " (l-1)^" << r.factors->lm1_mult << " (l+1)^"
       << r.factors->lp1_mult << " * [" << r.factors->residual.to_string("l") << "]\n";
  os << "  vertical edge in Newton polygon: " << yes_no(r.has_vertical_edge) << "\n";
  const auto& b = r.bound;
  if (b.applicable) {
    os << "  two-bridge bound: deg_l = " << b.deg_l << " <= " << *b.bound << " (slack " << *b.slack << "): "
       << (b.ok ? "ok" : "FAILED") << "\n";
    for (const auto& f : b.failures) os << "    FAIL: " << f << "\n";
  } else {
    os << "  two-bridge bound: " << b.note << "\n";
  }
  for (const auto& f : r.criteria) {
    os << "  criterion: " << f.message << "\n";
    for (const auto& o : f.omegas) {
      os << "    omega = " << o.exact;
      if (o.trace) os << ", trace(rho(lambda)) = " << o.trace->to_string();
      os << "\n";
    }
    if (f.residual_degree) os << "    residual factor of degree " << *f.residual_degree << "\n";
  }
  if (r.probe) os << "  " << r.probe->label << ": k = " << r.probe->k << ", (det-1)/2 = " << r.probe->bound.get_str() << "\n";
  for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
}

int run_apoly(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.input_path) throw UsageError("apoly-analyze needs -i with A-polynomial records");
  bool all_ok = true;
  json res = json::array();
  std::ostringstream table;
  for (auto a : load_apolys(*cfg.input_path)) {
    if (cfg.small_flag) a = APoly(a.name(), a.terms(), a.two_bridge(), true, a.knot_det());
    std::optional<Int> det;
    if (cfg.det) det = Int(*cfg.det);
    const AnalyzerReport r = analyze(a, det);
    all_ok = all_ok && r.bound_ok.value_or(true);
    res.push_back(report_json(r));
    report_table(r, table);
  }
  if (cfg.format == Format::kJson) emit_json(out, {{"command", "apoly-analyze"}, {"ok", all_ok}, {"results", res}});
  else out << table.str();
  return all_ok ? kExitOk : kExitVerificationFailed;
}

// --- sweep -----------------------------------------------------------------------

int run_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto rows = sweep(*cfg.p_max, thread_count());
  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.ok();
  switch (cfg.format) {
    case Format::kCsv:
      out << kSweepCsvHeader << "\n";
      for (const auto& r : rows)
        out << csv_field(r.name()) << "," << r.p << "," << r.q << "," << r.det << "," << r.meta_count << "," << r.riley_deg << ","
            << yes_no(r.squarefree) << "," << yes_no(r.relator_ok) << "," << yes_no(r.longitude_ok) << "\n";
      break;
    case Format::kJson: {
      json jr = json::array();
      for (const auto& r : rows) {
        json j{{"name", r.name()},          {"p", r.p},
               {"q", r.q},                  {"det", r.det},
               {"meta_count", r.meta_count}, {"riley_deg", r.riley_deg},
               {"squarefree", r.squarefree}, {"relator_ok", r.relator_ok},
               {"longitude_ok", r.longitude_ok}, {"crosscheck_ok", r.crosscheck_ok},
               {"ok", r.ok()}};
        if (!r.error.empty()) j["error"] = r.error;
        jr.push_back(std::move(j));
      }
      emit_json(out, {{"command", "sweep"}, {"p_max", *cfg.p_max}, {"ok", all_ok}, {"rows", jr}});
      break;
    }
    case Format::kTable:
      for (const auto& r : rows) {
        out << r.name() << "  det " << r.det << "  census " << r.meta_count << "  deg " << r.riley_deg
            << "  squarefree " << yes_no(r.squarefree) << "  relator " << yes_no(r.relator_ok) << "  longitude "
            << yes_no(r.longitude_ok) << (r.ok() ? "  ok" : "  FAILED") << "\n";
        if (!r.error.empty()) out << "  error: " << r.error << "\n";
      }
      out << rows.size() << " knot(s), " << (all_ok ? "all checks pass" : "FAILURES present") << "\n";
      break;
  }
  return all_ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

std::optional<Command> parse_command(const std::string& name) {
  auto it = command_table().find(name);
  if (it == command_table().end()) return std::nullopt;
  return it->second;
}

std::string command_name(Command c) {
  for (const auto& [n, v] : command_table())
    if (v == c) return n;
  return "?";
}

std::optional<Format> parse_format(const std::string& name) {
  if (name == "table") return Format::kTable;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  return std::nullopt;
}

void validate(const RunConfig& cfg) {
  const bool has_pq = cfg.p.has_value() && cfg.q.has_value();
  if (cfg.p.has_value() != cfg.q.has_value()) throw std::invalid_argument("-p and -q must be given together");
  if (cfg.input_path && has_pq) throw std::invalid_argument("give either -i or -p/-q, not both");
  switch (cfg.command) {
    case Command::kDet:
    case Command::kMetaCount:
    case Command::kTbRiley:
    case Command::kTbVerify:
    case Command::kTbCrosscheck:
      if (!cfg.input_path && !has_pq) throw std::invalid_argument(command_name(cfg.command) + " needs -i FILE or -p P -q Q");
      break;
    case Command::kMetaEnum:
    case Command::kMetaVerify:
    case Command::kApolyAnalyze:
      if (!cfg.input_path) throw std::invalid_argument(command_name(cfg.command) + " needs -i FILE");
      break;
    case Command::kSweep:
      if (!cfg.p_max) throw std::invalid_argument("sweep needs --p-max");
      if (*cfg.p_max < 3 || *cfg.p_max % 2 == 0) throw std::invalid_argument("--p-max must be odd and at least 3");
      break;
  }
  if (has_pq && !TwoBridge::valid(*cfg.p, *cfg.q))
    throw std::invalid_argument("invalid two-bridge parameters: need p odd >= 3, q odd, gcd(p,q) = 1, p > |q| > 0");
  if (cfg.format == Format::kCsv && cfg.command != Command::kDet && cfg.command != Command::kMetaCount &&
      cfg.command != Command::kMetaEnum && cfg.command != Command::kTbCrosscheck && cfg.command != Command::kSweep)
    throw std::invalid_argument("csv output is not available for " + command_name(cfg.command));
  if (cfg.det && (*cfg.det <= 0 || *cfg.det % 2 == 0)) throw std::invalid_argument("--det must be odd and positive");
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    switch (cfg.command) {
      case Command::kDet: return run_scalar(cfg, out, false);
      case Command::kMetaCount: return run_scalar(cfg, out, true);
      case Command::kMetaEnum: return run_meta_enum(cfg, out);
      case Command::kMetaVerify: return run_meta_verify(cfg, out);
      case Command::kTbRiley: return run_tb_riley(cfg, out, err);
      case Command::kTbVerify: return run_tb_verify(cfg, out, err);
      case Command::kTbCrosscheck: return run_tb_crosscheck(cfg, out);
      case Command::kApolyAnalyze: return run_apoly(cfg, out);
      case Command::kSweep: return run_sweep(cfg, out);
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    // e.g. det(V + V^T) = 0 or an even determinant: the data is not a knot.
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const RileyError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitInputError;
}

// --- sweep machinery ---------------------------------------------------------------

std::string SweepRow::name() const { return "S(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

std::vector<std::pair<long, long>> sweep_pairs(long p_max) {
  std::vector<std::pair<long, long>> out;
  for (long p = 3; p <= p_max; p += 2)
    for (long q = 1; q < p; q += 2)
      if (TwoBridge::valid(p, q)) out.emplace_back(p, q);
  return out;
}

SweepRow sweep_row(long p, long q) {
  SweepRow r;
  r.p = p;
  r.q = q;
  const TwoBridge k(p, q);
  r.det = determinant_of_knot(k).get_si();
  r.meta_count = count_metabelian(determinant_of_knot(k)).get_si();
  try {
    const RileySection s = section_at_minus_one(k);
    r.riley_deg = s.roots_count;
    r.squarefree = s.squarefree;
    r.crosscheck_ok = cross_check_counts(k).ok;
    r.relator_ok = verify_relator_mod(k, s.phi).ok;
    r.longitude_ok = verify_longitude_mod_phi(k).ok;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

std::vector<SweepRow> sweep(long p_max, unsigned threads) {
  const auto pairs = sweep_pairs(p_max);
  return parallel_map<SweepRow>(pairs.size(), threads,
                                [&pairs](std::size_t i) { return sweep_row(pairs[i].first, pairs[i].second); });
}

unsigned thread_count() {
  if (const char* env = std::getenv("KNOTMETA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace knotmeta::cli
