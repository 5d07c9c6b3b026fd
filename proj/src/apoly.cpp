#include "knotmeta/apoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotmeta {

namespace {

// A(m, 1) as a polynomial in m; zero iff (l - 1) divides A.
UniPoly restrict_l_to_one(const APoly::Terms& terms) {
  UniPoly out;
  for (const auto& [e, c] : terms) out += UniPoly::monomial(GaussRat(Rat(c)), static_cast<std::size_t>(e.first));
  return out;
}

// A(m0, l) as a polynomial in l.
UniPoly specialize_m(const APoly::Terms& terms, const GaussRat& m0) {
  UniPoly out;
  for (const auto& [e, c] : terms) {
    GaussRat mp(1);
    for (long k = 0; k < e.first; ++k) mp *= m0;
    out += UniPoly::monomial(mp * GaussRat(Rat(c)), static_cast<std::size_t>(e.second));
  }
  return out;
}

long cross(const std::pair<long, long>& o, const std::pair<long, long>& a, const std::pair<long, long>& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

bool is_perfect_square(const Int& n, Int& root) {
  if (sgn(n) < 0) return false;
  root = sqrt(n);
  return root * root == n;
}

}  // namespace

APoly::APoly(std::string name, Terms terms, std::optional<TwoBridgeTag> tag, std::optional<bool> small,
             std::optional<Int> det)
    : name_(std::move(name)), terms_(std::move(terms)), tag_(tag), small_(small), det_(std::move(det)) {
  if (terms_.empty()) throw std::invalid_argument("A-polynomial has no terms (zero polynomial)");
  for (const auto& [e, c] : terms_) {
    if (e.first < 0 || e.second < 0) throw std::invalid_argument("negative exponent in A-polynomial term");
    if (sgn(c) == 0) throw std::invalid_argument("zero coefficient stored in A-polynomial");
    if (e.first % 2 != 0)
      throw std::invalid_argument("odd m-exponent " + std::to_string(e.first) + ": A-polynomials have only even powers of m");
  }
  if (restrict_l_to_one(terms_).is_zero())
    throw std::invalid_argument("l - 1 divides the polynomial: the abelian factor must be removed");
  if (det_ && (sgn(*det_) <= 0 || mpz_even_p(det_->get_mpz_t())))
    throw std::invalid_argument("knot determinant must be odd and positive");
  if (sgn(terms_.begin()->second) < 0)
    for (auto& [e, c] : terms_) c = -c;
}

long APoly::deg_l() const {
  long d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e.second);
  return d;
}

std::string APoly::to_string() const {
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = sgn(c) < 0;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    std::string mono;
    if (e.first) mono += e.first == 1 ? "m" : "m^" + std::to_string(e.first);
    if (e.second) mono += (mono.empty() ? "" : "*") + (e.second == 1 ? std::string("l") : "l^" + std::to_string(e.second));
    const Int mag = abs(c);
    if (mono.empty()) out += mag.get_str();
    else out += (mag == 1 ? "" : mag.get_str() + "*") + mono;
    first = false;
  }
  return out;
}

UniPoly eval_at_sqrt_minus_one(const APoly& a) {
  UniPoly out;
  for (const auto& [e, c] : a.terms())
    out += UniPoly::monomial(i_pow(e.first) * GaussRat(Rat(c)), static_cast<std::size_t>(e.second));
  return out;
}

// --- factor profile ------------------------------------------------------------

UniPoly FactorProfile::reconstruct() const {
  return UniPoly::monomial(GaussRat(1), static_cast<std::size_t>(l_mult)) *
         poly_pow(UniPoly::from_ints({-1, 1}), static_cast<unsigned>(lm1_mult)) *
         poly_pow(UniPoly::from_ints({1, 1}), static_cast<unsigned>(lp1_mult)) * residual;
}

FactorProfile factor_profile(const UniPoly& f) {
  if (f.is_zero()) throw MathError("factor profile of the zero polynomial");
  FactorProfile fp;
  UniPoly g = f;
  while (g.coeff(0).is_zero()) {
    g = poly_divmod(g, UniPoly::var()).quot;
    ++fp.l_mult;
  }
  auto strip = [&g](const UniPoly& lin, long& mult) {
    for (;;) {
      DivMod qr = poly_divmod(g, lin);
      if (!qr.rem.is_zero()) return;
      g = std::move(qr.quot);
      ++mult;
    }
  };
  strip(UniPoly::from_ints({-1, 1}), fp.lm1_mult);
  strip(UniPoly::from_ints({1, 1}), fp.lp1_mult);
  fp.residual = std::move(g);
  return fp;
}

// --- Newton polygon ------------------------------------------------------------

std::vector<std::pair<long, long>> newton_polygon(const APoly& a) {
  std::vector<std::pair<long, long>> pts;
  for (const auto& [e, c] : a.terms()) pts.push_back(e);  // map order: sorted, unique
  if (pts.size() <= 2) return pts;
  // Andrew's monotone chain; strict turns only, so collinear points drop out.
  std::vector<std::pair<long, long>> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool vertical_edge_check(const APoly& a) {
  const auto hull = newton_polygon(a);
  if (hull.size() < 2) return false;
  if (hull.size() == 2) return hull[0].first == hull[1].first;
  for (std::size_t i = 0; i < hull.size(); ++i)
    if (hull[i].first == hull[(i + 1) % hull.size()].first) return true;
  return false;
}

// --- degree bound ----------------------------------------------------------------

DegreeBoundReport degree_bound_check(const APoly& a) {
  DegreeBoundReport r;
  const UniPoly ev = eval_at_sqrt_minus_one(a);
  r.deg_l = a.deg_l();
  r.eval_deg_l = ev.is_zero() ? -1 : ev.degree().value();
  r.degrees_agree = r.eval_deg_l == r.deg_l;
  r.vertical_edge = vertical_edge_check(a);
  if (!ev.is_zero()) {
    const FactorProfile fp = factor_profile(ev);
    r.k = fp.lm1_mult;
    r.pure_lm1_power = fp.l_mult == 0 && fp.lp1_mult == 0 && fp.residual.is_constant();
  }
  if (a.knot_det()) r.exceeds_metabelian_count = Int(r.deg_l) > (*a.knot_det() - 1) / 2;

  if (!a.two_bridge()) {
    r.applicable = false;
    r.note = "no two-bridge tag: the bound deg_l <= (p-1)/2 does not apply";
    if (r.exceeds_metabelian_count.value_or(false))
      r.note += "; deg_l = " + std::to_string(r.deg_l) + " exceeds (det-1)/2 = " + Int((*a.knot_det() - 1) / 2).get_str();
    return r;
  }
  r.applicable = true;
  const long p = a.two_bridge()->p;
  r.bound = (p - 1) / 2;
  r.slack = *r.bound - r.deg_l;
  auto fail = [&r](std::string msg) {
    r.ok = false;
    r.failures.push_back(std::move(msg));
  };
  if (r.deg_l > *r.bound)
    fail("deg_l = " + std::to_string(r.deg_l) + " exceeds (p-1)/2 = " + std::to_string(*r.bound));
  if (!r.pure_lm1_power) fail("A(sqrt(-1), l) is not a pure power of (l - 1): " + ev.to_string("l"));
  if (r.vertical_edge) fail("Newton polygon has a vertical edge");
  if (!r.vertical_edge && !r.degrees_agree)
    fail("no vertical edge but deg_l A(sqrt(-1), l) = " + std::to_string(r.eval_deg_l) +
         " differs from deg_l A = " + std::to_string(r.deg_l));
  if (r.pure_lm1_power && r.k != r.eval_deg_l) fail("k differs from deg_l A(sqrt(-1), l)");
  r.note = "slack " + std::to_string(*r.slack) + " character(s) lost to discarding operations";
  return r;
}

// --- criteria --------------------------------------------------------------------

std::string finding_kind_name(FindingKind k) {
  switch (k) {
    case FindingKind::kArcs: return "arcs";
    case FindingKind::kTraceFreeNonMetabelian: return "trace_free_non_metabelian";
    case FindingKind::kInconclusive: return "inconclusive";
    case FindingKind::kNone: return "none";
  }
  return "none";
}

namespace {

std::vector<Omega> residual_omegas(const UniPoly& res) {
  std::vector<Omega> out;
  const long d = res.degree().value();
  auto with_trace = [](GaussRat w, std::string exact) {
    Omega o{std::move(exact), w, w + inverse(w)};
    return o;
  };
  if (d == 1) {
    const GaussRat w = -res.coeff(0) / res.coeff(1);
    out.push_back(with_trace(w, w.to_string()));
    return out;
  }
  // Quadratic a l^2 + b l + c with rational coefficients.
  const Rat a = res.coeff(2).re(), b = res.coeff(1).re(), c = res.coeff(0).re();
  Rat disc = b * b - 4 * a * c;
  // sqrt(N/D) = sqrt(N*D)/D
  Int num = disc.get_num() * disc.get_den();
  Int den = disc.get_den();
  Int root;
  const bool neg = sgn(num) < 0;
  const Int mag = abs(num);
  if (is_perfect_square(mag, root)) {
    Rat s(root, den);
    s.canonicalize();
    for (int sign : {+1, -1}) {
      GaussRat w = neg ? GaussRat(-b / (2 * a), sign * s / (2 * a)) : GaussRat((-b + sign * s) / (2 * a));
      out.push_back(with_trace(w, w.to_string()));
    }
    return out;
  }
  for (const char* pm : {"+", "-"}) {
    Omega o;
    o.exact = "(" + Rat(-b).get_str() + " " + pm + " sqrt(" + disc.get_str() + "))/(" + Rat(2 * a).get_str() + ")";
    if (c == a) o.trace = GaussRat(-b / a);  // reciprocal pair omega, omega^{-1}
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

std::vector<Finding> proposition_criteria(const APoly& a) {
  const UniPoly ev = eval_at_sqrt_minus_one(a);
  if (ev.is_zero())
    return {{FindingKind::kArcs, "arcs of irreducible non-metabelian characters exist", {}, std::nullopt}};

  const FactorProfile fp = factor_profile(ev);
  const bool other_factor = fp.lp1_mult > 0 || !fp.residual.is_constant();
  if (!other_factor) return {{FindingKind::kNone, "no criterion fires", {}, std::nullopt}};
  if (!a.small().value_or(false))
    return {{FindingKind::kInconclusive, "inconclusive: smallness not asserted", {}, std::nullopt}};

  Finding f{FindingKind::kTraceFreeNonMetabelian,
            "irreducible non-metabelian representation with trace(rho(mu))=0 exists, "
            "trace(rho(lambda))=omega+omega^-1",
            {},
            std::nullopt};
  if (fp.lp1_mult > 0) f.omegas.push_back({"-1", GaussRat(-1), GaussRat(-2)});
  if (!fp.residual.is_constant()) {
    const long d = fp.residual.degree().value();
    if (d <= 2) {
      for (auto& o : residual_omegas(fp.residual)) f.omegas.push_back(std::move(o));
    } else {
      f.residual_degree = d;
    }
  }
  return {f};
}

MultiplicityProbe metabelian_multiplicity_probe(const APoly& a, const Int& det) {
  if (mpz_even_p(det.get_mpz_t())) throw std::invalid_argument("knot determinant must be odd");
  MultiplicityProbe pr;
  const UniPoly ev = eval_at_sqrt_minus_one(a);
  pr.k = ev.is_zero() ? 0 : factor_profile(ev).lm1_mult;
  pr.bound = (abs(det) - 1) / 2;
  pr.holds = Int(pr.k) <= pr.bound;
  pr.label = pr.holds ? "conjecture probe: multiplicity of (l-1) within (det-1)/2"
                      : "conjecture counterexample: multiplicity of (l-1) exceeds (det-1)/2";
  return pr;
}

AnalyzerReport analyze(const APoly& a, std::optional<Int> det) {
  AnalyzerReport r;
  r.name = a.name();
  r.deg_l = a.deg_l();
  r.eval_at_i = eval_at_sqrt_minus_one(a);
  if (!r.eval_at_i.is_zero()) {
    r.factors = factor_profile(r.eval_at_i);
    r.k = r.factors->lm1_mult;
  }
  r.hull = newton_polygon(a);
  r.has_vertical_edge = vertical_edge_check(a);
  r.bound = degree_bound_check(a);
  if (r.bound.applicable) r.bound_ok = r.bound.ok;
  r.criteria = proposition_criteria(a);
  if (!det) det = a.knot_det();
  if (det) r.probe = metabelian_multiplicity_probe(a, *det);

  // Repeated factors are not allowed in the normal form; test at m = 3.
  const UniPoly at3 = specialize_m(a.terms(), GaussRat(3));
  if (!at3.is_constant() && !is_squarefree(at3))
    r.warnings.push_back("A(3, l) has a repeated factor: polynomial may not be in reduced normal form");
  return r;
}

}  // namespace knotmeta
