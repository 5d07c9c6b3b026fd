#include "knotmeta/exactalg.hpp"

#include <sstream>

namespace knotmeta {

std::string rat_str(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat frac_part(const Rat& r) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rat out = r - Rat(fl);
  out.canonicalize();
  return out;
}

// --- GaussRat --------------------------------------------------------------

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rat re = re_ * o.re_ - im_ * o.im_;
  Rat im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= inverse(o); }

GaussRat inverse(const GaussRat& z) {
  if (z.is_zero()) throw MathError("division by zero in Q(i)");
  const Rat n = z.norm();
  return {z.re() / n, -z.im() / n};
}

GaussRat i_pow(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GaussRat(1);
    case 1: return GaussRat::i();
    case 2: return GaussRat(-1);
    default: return -GaussRat::i();
  }
}

std::string GaussRat::to_string() const {
  auto r = [](const Rat& x) { return x.get_str(); };
  if (sgn(im_) == 0) return r(re_);
  std::string im_part = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : r(im_) + "*i";
  if (sgn(re_) == 0) return im_part;
  if (sgn(im_) > 0) return r(re_) + "+" + im_part;
  return r(re_) + im_part;
}

// --- UniPoly ---------------------------------------------------------------

UniPoly::UniPoly(std::vector<GaussRat> coeffs) : c_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(const GaussRat& c) { return UniPoly(std::vector<GaussRat>{c}); }

UniPoly UniPoly::monomial(const GaussRat& c, std::size_t k) {
  std::vector<GaussRat> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<GaussRat> v;
  v.reserve(coeffs.size());
  for (long c : coeffs) v.emplace_back(c);
  return UniPoly(std::move(v));
}

const GaussRat& UniPoly::leading() const {
  if (c_.empty()) throw MathError("leading coefficient of the zero polynomial");
  return c_.back();
}

bool UniPoly::is_real() const {
  for (const auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

bool UniPoly::is_integral_real() const {
  for (const auto& c : c_)
    if (!c.is_real() || c.re().get_den() != 1) return false;
  return true;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussRat> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& a) {
  UniPoly out = a;
  for (auto& c : out.c_) c = -c;
  return out;
}

UniPoly UniPoly::scaled(const GaussRat& k) const {
  if (k.is_zero()) return {};
  UniPoly out = *this;
  for (auto& c : out.c_) c *= k;
  return out;
}

GaussRat UniPoly::eval(const GaussRat& x) const {
  GaussRat acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return scaled(inverse(leading()));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const GaussRat& c = c_[k];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string cs;
    bool neg = false;
    if (c.is_real()) {
      neg = sgn(c.re()) < 0;
      Rat mag = abs(c.re());
      cs = (mag == 1 && k > 0) ? "" : mag.get_str();
    } else {
      cs = "(" + c.to_string() + ")";
    }
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    os << cs;
    if (!cs.empty() && !mono.empty()) os << "*";
    os << mono;
    first = false;
  }
  return os.str();
}

UniPoly poly_add(const UniPoly& p, const UniPoly& q) { return p + q; }
UniPoly poly_mul(const UniPoly& p, const UniPoly& q) { return p * q; }

DivMod poly_divmod(const UniPoly& p, const UniPoly& divisor) {
  if (divisor.is_zero()) throw MathError("polynomial division by zero");
  const long dd = divisor.degree().value();
  std::vector<GaussRat> rem = p.coeffs();
  if (static_cast<long>(rem.size()) - 1 < dd) return {UniPoly(), p};
  const GaussRat inv_lead = inverse(divisor.leading());
  std::vector<GaussRat> quot(rem.size() - static_cast<std::size_t>(dd));
  for (long k = static_cast<long>(rem.size()) - 1; k >= dd; --k) {
    const GaussRat factor = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (factor.is_zero()) continue;
    quot[static_cast<std::size_t>(k - dd)] = factor;
    for (long j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= factor * divisor.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly poly_rem(const UniPoly& p, const UniPoly& divisor) { return poly_divmod(p, divisor).rem; }

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw MathError("gcd(0, 0) is undefined");
  UniPoly a = p.monic();
  UniPoly b = q.monic();
  while (!b.is_zero()) {
    UniPoly r = poly_rem(a, b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

UniPoly poly_derivative(const UniPoly& p) {
  if (p.coeffs().size() <= 1) return {};
  std::vector<GaussRat> out(p.coeffs().size() - 1);
  for (std::size_t k = 1; k < p.coeffs().size(); ++k)
    out[k - 1] = p.coeffs()[k] * GaussRat(static_cast<long>(k));
  return UniPoly(std::move(out));
}

UniPoly poly_pow(const UniPoly& p, unsigned n) {
  UniPoly acc = UniPoly::constant(GaussRat(1));
  UniPoly base = p;
  while (n) {
    if (n & 1U) acc *= base;
    n >>= 1U;
    if (n) base *= base;
  }
  return acc;
}

UniPoly poly_inverse_mod(const UniPoly& a, const UniPoly& m) {
  if (m.is_zero()) throw MathError("inverse modulo the zero polynomial");
  // Invariant: r0 = s0 * a (mod m), r1 = s1 * a (mod m).
  UniPoly r0 = m, r1 = poly_rem(a, m);
  UniPoly s0, s1 = UniPoly::constant(GaussRat(1));
  while (!r1.is_zero()) {
    DivMod qr = poly_divmod(r0, r1);
    UniPoly s2 = s0 - qr.quot * s1;
    r0 = std::move(r1);
    r1 = std::move(qr.rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != Degree(0)) throw MathError("residue is not invertible: gcd with modulus is " + r0.monic().to_string());
  return poly_rem(s0.scaled(inverse(r0.leading())), m);
}

bool is_squarefree(const UniPoly& p) {
  if (p.is_zero()) return false;
  if (p.is_constant()) return true;
  return poly_gcd(p, poly_derivative(p)).is_constant();
}

long distinct_root_count(const UniPoly& p) {
  if (p.is_zero()) throw MathError("the zero polynomial has infinitely many roots");
  if (p.is_constant()) return 0;
  return p.degree().value() - poly_gcd(p, poly_derivative(p)).degree().value();
}

// --- Residue ---------------------------------------------------------------

Residue::Residue(std::shared_ptr<const UniPoly> modulus, const UniPoly& value)
    : mod_(std::move(modulus)), v_(poly_rem(value, *mod_)) {}

void Residue::check_same_ring(const Residue& o) const {
  if (mod_ != o.mod_ && !(*mod_ == *o.mod_))
    throw MathError("residues from different quotient rings");
}

Residue& Residue::operator+=(const Residue& o) {
  check_same_ring(o);
  v_ += o.v_;
  return *this;
}

Residue& Residue::operator-=(const Residue& o) {
  check_same_ring(o);
  v_ -= o.v_;
  return *this;
}

Residue& Residue::operator*=(const Residue& o) {
  check_same_ring(o);
  v_ = poly_rem(v_ * o.v_, *mod_);
  return *this;
}

bool operator==(const Residue& a, const Residue& b) {
  a.check_same_ring(b);
  return a.v_ == b.v_;
}

Residue inverse(const Residue& r) {
  return {std::make_shared<const UniPoly>(r.modulus()), poly_inverse_mod(r.value(), r.modulus())};
}

ResidueRing::ResidueRing(UniPoly modulus) {
  if (modulus.is_constant()) throw MathError("quotient by a constant polynomial");
  mod_ = std::make_shared<const UniPoly>(std::move(modulus));
}

}  // namespace knotmeta
