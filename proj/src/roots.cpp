// Root approximation for display. Nothing here feeds a verification path.

#include <algorithm>
#include <cmath>

#include "knotmeta/riley.hpp"

namespace knotmeta {

namespace {

using Sturm = std::vector<UniPoly>;

Sturm sturm_chain(const UniPoly& p) {
  Sturm chain{p, poly_derivative(p)};
  while (!chain.back().is_zero()) {
    UniPoly r = -poly_rem(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

int sign_of(const GaussRat& x) { return sgn(x.re()); }

long sign_changes(const Sturm& chain, const Rat& x) {
  long changes = 0;
  int last = 0;
  for (const auto& f : chain) {
    const int s = sign_of(f.eval(GaussRat(x)));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

long sign_changes_at_infinity(const Sturm& chain, int dir) {
  long changes = 0;
  int last = 0;
  for (const auto& f : chain) {
    int s = sign_of(f.leading());
    if (dir < 0 && f.degree().value() % 2 != 0) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Every root lies in [-B, B].
Rat cauchy_bound(const UniPoly& p) {
  Rat m = 0;
  const Rat lead = abs(p.leading().re());
  for (std::size_t k = 0; k + 1 < p.coeffs().size(); ++k) m = std::max(m, Rat(abs(p.coeffs()[k].re()) / lead));
  return m + 1;
}

// Isolates roots in (lo, hi] into intervals holding exactly one root each.
void isolate(const Sturm& chain, const Rat& lo, const Rat& hi, long count, std::vector<std::pair<Rat, Rat>>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  Rat mid = (lo + hi) / 2;
  const long left = sign_changes(chain, lo) - sign_changes(chain, mid);
  isolate(chain, lo, mid, left, out);
  isolate(chain, mid, hi, count - left, out);
}

double refine(const UniPoly& f, Rat lo, Rat hi) {
  // Root in (lo, hi]; f squarefree.
  if (sign_of(f.eval(GaussRat(hi))) == 0) return hi.get_d();
  const int s_hi = sign_of(f.eval(GaussRat(hi)));
  for (int it = 0; it < 200; ++it) {
    const double width = Rat(hi - lo).get_d();
    if (width <= 1e-15 * std::max(1.0, std::fabs(hi.get_d()))) break;
    Rat mid = (lo + hi) / 2;
    const int s = sign_of(f.eval(GaussRat(mid)));
    if (s == 0) return mid.get_d();
    if (s == s_hi) hi = mid;
    else lo = mid;
  }
  return Rat((lo + hi) / 2).get_d();
}

std::vector<std::complex<long double>> durand_kerner(const UniPoly& p) {
  const std::size_t n = static_cast<std::size_t>(p.degree().value());
  std::vector<std::complex<long double>> c(n + 1);
  const UniPoly m = p.monic();
  for (std::size_t k = 0; k <= n; ++k) c[k] = {m.coeffs()[k].re().get_d(), m.coeffs()[k].im().get_d()};
  auto eval = [&c](std::complex<long double> z) {
    std::complex<long double> acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
  };
  long double radius = 0;
  for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
  radius += 1;
  std::vector<std::complex<long double>> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(radius * 0.9L, 0.4L + 6.283185307179586L * k / n);
  for (int it = 0; it < 2000; ++it) {
    long double delta = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<long double> den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= z[i] - z[j];
      const std::complex<long double> step = eval(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-18L) break;
  }
  return z;
}

}  // namespace

long sturm_real_root_count(const UniPoly& p) {
  if (p.is_zero()) throw MathError("the zero polynomial has infinitely many roots");
  if (!p.is_real()) throw MathError("Sturm sequences need real coefficients");
  if (p.is_constant()) return 0;
  const Sturm chain = sturm_chain(p);
  return sign_changes_at_infinity(chain, -1) - sign_changes_at_infinity(chain, +1);
}

std::vector<std::complex<double>> approximate_roots(const UniPoly& p) {
  if (p.is_zero()) throw MathError("the zero polynomial has infinitely many roots");
  std::vector<std::complex<double>> out;
  if (p.is_constant()) return out;

  std::vector<double> reals;
  if (p.is_real()) {
    const UniPoly sqf = poly_divmod(p, poly_gcd(p, poly_derivative(p))).quot;
    const Sturm chain = sturm_chain(sqf);
    const Rat b = cauchy_bound(sqf);
    std::vector<std::pair<Rat, Rat>> intervals;
    isolate(chain, Rat(-b), b, sign_changes(chain, -b) - sign_changes(chain, b), intervals);
    for (const auto& [lo, hi] : intervals) reals.push_back(refine(sqf, lo, hi));
  }

  // Only needed for the non-real roots (and multiplicities); real ones are
  // replaced by the bisection values.
  std::vector<std::complex<long double>> dk = durand_kerner(p);
  const std::size_t n_real_dk = std::min<std::size_t>(reals.size(), dk.size());
  std::sort(dk.begin(), dk.end(), [](auto a, auto b) { return std::fabs(a.imag()) < std::fabs(b.imag()); });
  for (double r : reals) out.emplace_back(r, 0.0);
  for (std::size_t k = n_real_dk; k < dk.size(); ++k)
    out.emplace_back(static_cast<double>(dk[k].real()), static_cast<double>(dk[k].imag()));
  std::sort(out.begin(), out.end(), [](auto a, auto b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

}  // namespace knotmeta
