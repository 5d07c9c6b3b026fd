#include "knotmeta/exactalg.hpp"

#include <sstream>

namespace knotmeta {

LaurentBiPoly LaurentBiPoly::constant(const Int& c) { return monomial(c, 0, 0); }

LaurentBiPoly LaurentBiPoly::monomial(const Int& c, long s_exp, long u_exp) {
  if (u_exp < 0) throw MathError("negative u-exponent in Z[s^{+-1}][u]");
  LaurentBiPoly p;
  if (sgn(c) != 0) p.t_.emplace(Key{s_exp, u_exp}, c);
  return p;
}

Int LaurentBiPoly::coeff(long s_exp, long u_exp) const {
  auto it = t_.find({s_exp, u_exp});
  return it == t_.end() ? Int(0) : it->second;
}

void LaurentBiPoly::add_term(const Key& k, const Int& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = t_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) t_.erase(it);
}

Degree LaurentBiPoly::u_degree() const {
  if (t_.empty()) return Degree::neg_inf();
  long d = 0;
  for (const auto& [k, c] : t_) d = std::max(d, k.second);
  return d;
}

LaurentBiPoly LaurentBiPoly::u_coeff(long k) const {
  LaurentBiPoly out;
  for (const auto& [key, c] : t_)
    if (key.second == k) out.t_.emplace(Key{key.first, 0}, c);
  return out;
}

bool LaurentBiPoly::s_exponents_even() const {
  for (const auto& [k, c] : t_)
    if (k.first % 2 != 0) return false;
  return true;
}

LaurentBiPoly& LaurentBiPoly::operator+=(const LaurentBiPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, c);
  return *this;
}

LaurentBiPoly& LaurentBiPoly::operator-=(const LaurentBiPoly& o) {
  for (const auto& [k, c] : o.t_) add_term(k, -c);
  return *this;
}

LaurentBiPoly operator*(const LaurentBiPoly& a, const LaurentBiPoly& b) {
  LaurentBiPoly out;
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_)
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return out;
}

LaurentBiPoly operator-(const LaurentBiPoly& a) {
  LaurentBiPoly out = a;
  for (auto& [k, c] : out.t_) c = -c;
  return out;
}

LaurentBiPoly LaurentBiPoly::shifted_u(long k) const {
  LaurentBiPoly out;
  for (const auto& [key, c] : t_) {
    if (key.second + k < 0) throw MathError("shift would create a negative u-exponent");
    out.t_.emplace(Key{key.first, key.second + k}, c);
  }
  return out;
}

namespace {

// Terms are listed by descending u-degree, then descending s-degree.
std::string render(const LaurentBiPoly::Terms& terms, const std::string& svar, bool halve) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    long se = it->first.first;
    const long ue = it->first.second;
    if (halve) se /= 2;
    const Int& c = it->second;
    const bool neg = sgn(c) < 0;
    Int mag = abs(c);
    std::string mono;
    auto append = [&mono](const std::string& f) { mono += (mono.empty() ? "" : "*") + f; };
    if (ue == 1) append("u");
    if (ue > 1) append("u^" + std::to_string(ue));
    if (se == 1) append(svar);
    if (se != 0 && se != 1) append(svar + "^" + std::to_string(se));
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << mono;
    }
    first = false;
  }
  return os.str();
}

}  // namespace

std::string LaurentBiPoly::to_string() const { return render(t_, "s", false); }

std::string LaurentBiPoly::to_t_string() const {
  if (!s_exponents_even()) throw MathError("odd s-exponent: not an element of Z[t^{+-1}][u]");
  return render(t_, "t", true);
}

LaurentBiPoly laurent_mul(const LaurentBiPoly& p, const LaurentBiPoly& q) { return p * q; }

UniPoly laurent_eval_s_to_i(const LaurentBiPoly& p) {
  const long deg = p.u_degree().is_neg_inf() ? -1 : p.u_degree().value();
  std::vector<GaussRat> out(static_cast<std::size_t>(deg + 1));
  for (const auto& [k, c] : p.terms()) out[static_cast<std::size_t>(k.second)] += i_pow(k.first) * GaussRat(Rat(c));
  return UniPoly(std::move(out));
}

LaurentBiPoly laurent_pseudo_rem(const LaurentBiPoly& f, const LaurentBiPoly& g) {
  if (g.is_zero()) throw MathError("pseudo-remainder by zero");
  const long dg = g.u_degree().value();
  const LaurentBiPoly lead_g = g.u_coeff(dg);
  LaurentBiPoly r = f;
  while (!r.is_zero() && r.u_degree().value() >= dg) {
    const long dr = r.u_degree().value();
    const LaurentBiPoly lead_r = r.u_coeff(dr);
    r = lead_g * r - (lead_r * g).shifted_u(dr - dg);
  }
  return r;
}

}  // namespace knotmeta
