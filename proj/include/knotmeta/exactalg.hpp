#pragma once

// Exact arithmetic kernel: big integers and rationals (GMP), Gaussian
// rationals, dense univariate polynomials over Q(i), the quotient rings
// Q(i)[u]/(phi), the sparse Laurent ring Z[s^{+-1}][u], and 2x2 matrices
// over any of these.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotmeta {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when an exact operation has no answer in the ring at hand
/// (division by zero, non-invertible residue, gcd(0, 0)).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Canonical "num/den" rendering, used for every rational that leaves the
/// library (JSON, tables).
std::string rat_str(const Rat& r);

/// Reduces r into [0, 1).
Rat frac_part(const Rat& r);

// ---------------------------------------------------------------------------

class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rat re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return {Rat(0), Rat(1)}; }

  const Rat& re() const { return re_; }
  const Rat& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussRat conj() const { return {re_, -im_}; }
  Rat norm() const { return re_ * re_ + im_ * im_; }

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  Rat re_{0};
  Rat im_{0};
};

GaussRat inverse(const GaussRat& z);

/// i^k for any integer k.
GaussRat i_pow(long k);

// ---------------------------------------------------------------------------

/// Polynomial degree with a distinct -infinity for the zero polynomial.
class Degree {
 public:
  constexpr Degree() = default;
  constexpr Degree(long d) : d_(d) {}  // NOLINT(google-explicit-constructor)
  static constexpr Degree neg_inf() { return Degree{}; }

  constexpr bool is_neg_inf() const { return !d_.has_value(); }
  long value() const {
    if (!d_) throw MathError("degree of the zero polynomial is -infinity");
    return *d_;
  }

  friend constexpr Degree operator+(Degree a, Degree b) {
    if (!a.d_ || !b.d_) return neg_inf();
    return Degree(*a.d_ + *b.d_);
  }
  friend constexpr bool operator==(Degree a, Degree b) { return a.d_ == b.d_; }
  friend constexpr std::strong_ordering operator<=>(Degree a, Degree b) {
    if (!a.d_ || !b.d_) return a.d_.has_value() <=> b.d_.has_value();
    return *a.d_ <=> *b.d_;
  }

  std::string to_string() const { return d_ ? std::to_string(*d_) : "-inf"; }

 private:
  std::optional<long> d_;
};

// ---------------------------------------------------------------------------

/// Dense polynomial over Q(i); coeffs()[k] is the coefficient of u^k.
/// The stored vector never ends in a zero coefficient.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussRat> coeffs);

  static UniPoly constant(const GaussRat& c);
  static UniPoly monomial(const GaussRat& c, std::size_t k);
  static UniPoly var() { return monomial(GaussRat(1), 1); }
  /// Integer coefficients, lowest degree first.
  static UniPoly from_ints(std::initializer_list<long> coeffs);

  const std::vector<GaussRat>& coeffs() const { return c_; }
  GaussRat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : GaussRat(); }
  Degree degree() const {
    return c_.empty() ? Degree::neg_inf() : Degree(static_cast<long>(c_.size()) - 1);
  }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const GaussRat& leading() const;

  /// True when every coefficient lies in Q.
  bool is_real() const;
  /// True when every coefficient is a Gaussian integer with zero imaginary part.
  bool is_integral_real() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  UniPoly scaled(const GaussRat& k) const;
  GaussRat eval(const GaussRat& x) const;
  UniPoly monic() const;

  std::string to_string(const std::string& var = "u") const;

 private:
  void normalize();
  std::vector<GaussRat> c_;
};

struct DivMod {
  UniPoly quot;
  UniPoly rem;
};

UniPoly poly_add(const UniPoly& p, const UniPoly& q);
UniPoly poly_mul(const UniPoly& p, const UniPoly& q);
DivMod poly_divmod(const UniPoly& p, const UniPoly& divisor);
UniPoly poly_rem(const UniPoly& p, const UniPoly& divisor);
/// Monic gcd over Q(i). Throws MathError when both inputs are zero.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);
UniPoly poly_derivative(const UniPoly& p);
UniPoly poly_pow(const UniPoly& p, unsigned n);
/// a^{-1} mod m via extended Euclid; throws MathError when gcd(a, m) != 1.
UniPoly poly_inverse_mod(const UniPoly& a, const UniPoly& m);
/// True when p has no repeated factor over Q(i) (gcd(p, p') = 1).
bool is_squarefree(const UniPoly& p);
/// Number of distinct complex roots: deg p - deg gcd(p, p').
long distinct_root_count(const UniPoly& p);

// ---------------------------------------------------------------------------

/// Element of Q(i)[u]/(modulus). The modulus is shared between all residues
/// built by the same ResidueRing; binary operations require equal moduli.
class Residue {
 public:
  Residue(std::shared_ptr<const UniPoly> modulus, const UniPoly& value);

  const UniPoly& value() const { return v_; }
  const UniPoly& modulus() const { return *mod_; }
  bool is_zero() const { return v_.is_zero(); }

  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator-(const Residue& a) { return {a.mod_, -a.v_}; }
  friend bool operator==(const Residue& a, const Residue& b);

 private:
  void check_same_ring(const Residue& o) const;
  std::shared_ptr<const UniPoly> mod_;
  UniPoly v_;
};

Residue inverse(const Residue& r);

class ResidueRing {
 public:
  /// Throws MathError for a constant modulus (zero ring or no reduction).
  explicit ResidueRing(UniPoly modulus);

  Residue operator()(const UniPoly& p) const { return {mod_, p}; }
  Residue zero() const { return {mod_, UniPoly()}; }
  Residue one() const { return {mod_, UniPoly::constant(GaussRat(1))}; }
  const UniPoly& modulus() const { return *mod_; }

 private:
  std::shared_ptr<const UniPoly> mod_;
};

// ---------------------------------------------------------------------------

/// Sparse element of Z[s, s^{-1}][u]. Keys are (s-exponent, u-exponent);
/// no zero coefficient is ever stored and u-exponents are nonnegative.
class LaurentBiPoly {
 public:
  using Key = std::pair<long, long>;
  using Terms = std::map<Key, Int>;

  LaurentBiPoly() = default;
  static LaurentBiPoly constant(const Int& c);
  static LaurentBiPoly monomial(const Int& c, long s_exp, long u_exp);
  static LaurentBiPoly s_pow(long k) { return monomial(1, k, 0); }
  static LaurentBiPoly u() { return monomial(1, 0, 1); }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  Int coeff(long s_exp, long u_exp) const;

  Degree u_degree() const;
  /// Coefficient of u^k as a Laurent polynomial in s alone.
  LaurentBiPoly u_coeff(long k) const;
  /// True when every stored s-exponent is even, i.e. p lies in Z[t^{+-1}][u].
  bool s_exponents_even() const;

  LaurentBiPoly& operator+=(const LaurentBiPoly& o);
  LaurentBiPoly& operator-=(const LaurentBiPoly& o);
  friend LaurentBiPoly operator+(LaurentBiPoly a, const LaurentBiPoly& b) { return a += b; }
  friend LaurentBiPoly operator-(LaurentBiPoly a, const LaurentBiPoly& b) { return a -= b; }
  friend LaurentBiPoly operator*(const LaurentBiPoly& a, const LaurentBiPoly& b);
  friend LaurentBiPoly operator-(const LaurentBiPoly& a);
  friend bool operator==(const LaurentBiPoly& a, const LaurentBiPoly& b) { return a.t_ == b.t_; }

  /// Multiplies by u^k.
  LaurentBiPoly shifted_u(long k) const;

  /// Renders in s, e.g. "s^2 - u*s^-2".
  std::string to_string() const;
  /// Renders in t = s^2; throws MathError when an odd s-exponent is present.
  std::string to_t_string() const;

 private:
  void add_term(const Key& k, const Int& c);
  Terms t_;
};

LaurentBiPoly laurent_mul(const LaurentBiPoly& p, const LaurentBiPoly& q);
/// Substitutes s -> i (so t = s^2 -> -1), giving a polynomial in u over Q(i).
UniPoly laurent_eval_s_to_i(const LaurentBiPoly& p);
/// Pseudo-remainder of f by g as polynomials in u over Z[s^{+-1}]: the result
/// is zero iff g divides f over the fraction field Q(s). Throws on g = 0.
LaurentBiPoly laurent_pseudo_rem(const LaurentBiPoly& f, const LaurentBiPoly& g);

// ---------------------------------------------------------------------------

template <class T>
struct Mat2 {
  T a, b, c, d;

  T det() const { return a * d - b * c; }
  T trace() const { return a + d; }
  Mat2 adjugate() const { return {d, -b, -c, a}; }

  static Mat2 scalar(const T& one, const T& zero) { return {one, zero, zero, one}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }

  template <class F>
  auto map(F&& f) const -> Mat2<decltype(f(a))> {
    return {f(a), f(b), f(c), f(d)};
  }
};

template <class T>
Mat2<T> mat2_mul(const Mat2<T>& x, const Mat2<T>& y) {
  return x * y;
}

/// Inverse of an SL(2) element via the adjugate. Throws MathError when
/// det(x) != one.
template <class T>
Mat2<T> mat2_inv_sl2(const Mat2<T>& x, const T& one) {
  if (!(x.det() == one)) throw MathError("mat2_inv_sl2: determinant is not 1");
  return x.adjugate();
}

/// General inverse adj(x) * det(x)^{-1}; needs an inverse(T) overload.
template <class T>
Mat2<T> mat2_inverse(const Mat2<T>& x) {
  const T inv_det = inverse(x.det());
  const Mat2<T> adj = x.adjugate();
  return {adj.a * inv_det, adj.b * inv_det, adj.c * inv_det, adj.d * inv_det};
}

template <class T>
Mat2<T> mat2_pow(Mat2<T> base, unsigned long n, const Mat2<T>& identity) {
  Mat2<T> acc = identity;
  while (n) {
    if (n & 1U) acc = acc * base;
    n >>= 1U;
    if (n) base = base * base;
  }
  return acc;
}

}  // namespace knotmeta
