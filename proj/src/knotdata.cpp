#include "knotmeta/knotdata.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace knotmeta {

using nlohmann::json;

SeifertKnot::SeifertKnot(std::string name, IntMat v) : name_(std::move(name)), v_(std::move(v)) {
  if (!v_.is_square()) throw std::invalid_argument("Seifert matrix must be square");
  if (v_.rows() % 2 != 0) throw std::invalid_argument("Seifert matrix must have even dimension 2g");
  if (det(v_ - v_.transpose()) != 1)
    throw std::invalid_argument("det(V - V^T) must be 1 (symplectic intersection form)");
}

TwoBridge::TwoBridge(long p, long q, std::string name) : p_(p), q_(q), name_(std::move(name)) {
  if (p < 3) throw std::invalid_argument("p must be at least 3");
  if (p % 2 == 0) throw std::invalid_argument("p must be odd");
  if (q % 2 == 0) throw std::invalid_argument("q must be odd");
  if (!(p > std::labs(q) && q != 0)) throw std::invalid_argument("need p > |q| > 0");
  if (std::gcd(p, std::labs(q)) != 1) throw std::invalid_argument("p and q must be coprime");
  if (name_.empty()) name_ = "S(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

bool TwoBridge::valid(long p, long q) {
  return p >= 3 && p % 2 != 0 && q % 2 != 0 && q != 0 && p > std::labs(q) && std::gcd(p, std::labs(q)) == 1;
}

const std::string& knot_name(const KnotRecord& k) {
  return std::visit([](const auto& x) -> const std::string& { return x.name(); }, k);
}

// --- words -------------------------------------------------------------------

GroupWord GroupWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exp = -l.exp;
  return GroupWord(std::move(out));
}

GroupWord& GroupWord::operator*=(const GroupWord& o) {
  letters_.insert(letters_.end(), o.letters_.begin(), o.letters_.end());
  return *this;
}

GroupWord GroupWord::power(int gen, long n) {
  std::vector<Letter> out(static_cast<std::size_t>(std::labs(n)), Letter{gen, n < 0 ? -1 : 1});
  return GroupWord(std::move(out));
}

long GroupWord::exponent_sum() const {
  long s = 0;
  for (const auto& l : letters_) s += l.exp;
  return s;
}

long GroupWord::exponent_sum(int gen) const {
  long s = 0;
  for (const auto& l : letters_)
    if (l.gen == gen) s += l.exp;
  return s;
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    s += (i ? " x" : "x") + std::to_string(letters_[i].gen);
    if (letters_[i].exp < 0) s += "^-1";
  }
  return s;
}

// --- invariants of the models --------------------------------------------------

Int determinant_of_knot(const SeifertKnot& k) {
  Int d = abs(det(k.symmetrized()));
  if (sgn(d) == 0) throw std::domain_error("not a knot Seifert matrix: det(V + V^T) = 0");
  return d;
}

Int determinant_of_knot(const TwoBridge& k) { return k.p(); }

Int determinant_of_knot(const KnotRecord& k) {
  return std::visit([](const auto& x) { return determinant_of_knot(x); }, k);
}

std::vector<int> epsilon_sequence(const TwoBridge& k) {
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(k.p() - 1));
  for (long i = 1; i < k.p(); ++i) {
    const long num = i * k.q();
    long fl = num / k.p();
    if (num % k.p() != 0 && num < 0) --fl;  // floor, not truncation
    e.push_back(fl % 2 == 0 ? 1 : -1);
  }
  return e;
}

GroupWord relator_word(const TwoBridge& k) {
  const auto e = epsilon_sequence(k);
  std::vector<Letter> w;
  w.reserve(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) w.push_back({i % 2 == 0 ? 1 : 2, e[i]});
  return GroupWord(std::move(w));
}

GroupWord longitude_word(const TwoBridge& k) {
  const auto e = epsilon_sequence(k);
  const GroupWord w = relator_word(k);
  std::vector<Letter> tilde;
  long sigma = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    tilde.push_back({i % 2 == 0 ? 1 : 2, -e[i]});
    sigma += e[i];
  }
  return w.inverse() * GroupWord(std::move(tilde)) * GroupWord::power(1, 2 * sigma);
}

// --- JSON ----------------------------------------------------------------------

namespace {

Int json_int(const json& j, const std::string& what) {
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Int v;
    if (v.set_str(j.get<std::string>(), 10) == 0) return v;
  }
  throw std::invalid_argument(what + " must be an integer");
}

long json_long(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw std::invalid_argument(what + " must be an integer");
  return j.get<long>();
}

const json& field(const json& rec, const char* key) {
  auto it = rec.find(key);
  if (it == rec.end()) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string json_name(const json& rec, bool required) {
  auto it = rec.find("name");
  if (it == rec.end()) {
    if (required) throw std::invalid_argument("missing field \"name\"");
    return {};
  }
  if (!it->is_string()) throw std::invalid_argument("\"name\" must be a string");
  return it->get<std::string>();
}

json json_big(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::vector<json> parse_records(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (doc.is_object()) return {doc};
  if (doc.is_array()) return doc.get<std::vector<json>>();
  throw InputError("document must be a record object or an array of records");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string record_type(const json& rec) {
  if (!rec.is_object()) throw std::invalid_argument("record must be a JSON object");
  const json& t = field(rec, "type");
  if (!t.is_string()) throw std::invalid_argument("\"type\" must be a string");
  return t.get<std::string>();
}

KnotRecord knot_from_json(const json& rec) {
  const std::string type = record_type(rec);
  if (type == "seifert") {
    const json& v = field(rec, "V");
    if (!v.is_array() || v.empty()) throw std::invalid_argument("\"V\" must be a nonempty array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : v) {
      if (!row.is_array()) throw std::invalid_argument("\"V\" rows must be arrays");
      auto& r = rows.emplace_back();
      for (const auto& x : row) r.push_back(json_int(x, "Seifert matrix entry"));
    }
    return SeifertKnot(json_name(rec, true), IntMat::from_rows(rows));
  }
  if (type == "twobridge")
    return TwoBridge(json_long(field(rec, "p"), "p"), json_long(field(rec, "q"), "q"), json_name(rec, false));
  throw std::invalid_argument("unexpected record type \"" + type + "\" in a knot file");
}

APoly apoly_from_json(const json& rec) {
  const std::string type = record_type(rec);
  if (type != "apoly") throw std::invalid_argument("unexpected record type \"" + type + "\" in an A-polynomial file");
  const json& terms = field(rec, "terms");
  if (!terms.is_array()) throw std::invalid_argument("\"terms\" must be an array");
  APoly::Terms t;
  for (const auto& term : terms) {
    if (!term.is_object()) throw std::invalid_argument("term must be an object {m, l, c}");
    const long m = json_long(field(term, "m"), "m-exponent");
    const long l = json_long(field(term, "l"), "l-exponent");
    Int c = json_int(field(term, "c"), "coefficient");
    if (sgn(c) == 0) throw std::invalid_argument("coefficients must be nonzero");
    if (!t.emplace(std::make_pair(m, l), std::move(c)).second)
      throw std::invalid_argument("duplicate term m^" + std::to_string(m) + " l^" + std::to_string(l));
  }
  std::optional<TwoBridgeTag> tag;
  if (auto it = rec.find("twobridge"); it != rec.end()) {
    const long p = json_long(field(*it, "p"), "twobridge.p");
    const long q = json_long(field(*it, "q"), "twobridge.q");
    if (!TwoBridge::valid(p, q)) throw std::invalid_argument("invalid two-bridge tag");
    tag = TwoBridgeTag{p, q};
  }
  std::optional<bool> small;
  if (auto it = rec.find("small"); it != rec.end()) {
    if (!it->is_boolean()) throw std::invalid_argument("\"small\" must be a boolean");
    small = it->get<bool>();
  }
  std::optional<Int> det;
  if (auto it = rec.find("det"); it != rec.end()) det = json_int(*it, "det");
  return APoly(json_name(rec, true), std::move(t), tag, small, std::move(det));
}

template <class T, class F>
std::vector<T> parse_all(const std::string& text, F&& convert) {
  std::vector<T> out;
  const auto records = parse_records(text);
  for (std::size_t i = 0; i < records.size(); ++i) {
    try {
      out.push_back(convert(records[i]));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what(), static_cast<long>(i));
    } catch (const json::exception& e) {
      throw InputError(e.what(), static_cast<long>(i));
    }
  }
  return out;
}

}  // namespace

std::vector<KnotRecord> parse_knots(const std::string& json_text) {
  return parse_all<KnotRecord>(json_text, knot_from_json);
}

std::vector<KnotRecord> load_knots(const std::filesystem::path& path) { return parse_knots(read_file(path)); }

std::vector<APoly> parse_apolys(const std::string& json_text) {
  return parse_all<APoly>(json_text, apoly_from_json);
}

std::vector<APoly> load_apolys(const std::filesystem::path& path) { return parse_apolys(read_file(path)); }

std::string serialize_knots(const std::vector<KnotRecord>& knots) {
  json doc = json::array();
  for (const auto& k : knots) {
    if (const auto* s = std::get_if<SeifertKnot>(&k)) {
      json v = json::array();
      for (const auto& row : s->seifert_matrix().to_rows()) {
        json r = json::array();
        for (const auto& x : row) r.push_back(json_big(x));
        v.push_back(std::move(r));
      }
      doc.push_back({{"type", "seifert"}, {"name", s->name()}, {"V", std::move(v)}});
    } else {
      const auto& t = std::get<TwoBridge>(k);
      doc.push_back({{"type", "twobridge"}, {"name", t.name()}, {"p", t.p()}, {"q", t.q()}});
    }
  }
  return doc.dump(2);
}

std::string serialize_apolys(const std::vector<APoly>& polys) {
  json doc = json::array();
  for (const auto& a : polys) {
    json terms = json::array();
    for (const auto& [e, c] : a.terms()) terms.push_back({{"m", e.first}, {"l", e.second}, {"c", json_big(c)}});
    json rec{{"type", "apoly"}, {"name", a.name()}, {"terms", std::move(terms)}};
    if (a.two_bridge()) rec["twobridge"] = {{"p", a.two_bridge()->p}, {"q", a.two_bridge()->q}};
    if (a.small()) rec["small"] = *a.small();
    if (a.knot_det()) rec["det"] = json_big(*a.knot_det());
    doc.push_back(std::move(rec));
  }
  return doc.dump(2);
}

}  // namespace knotmeta
