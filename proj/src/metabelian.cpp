#include "knotmeta/metabelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotmeta {

// Canonical form: rotation in [0, 1/2), the sign of zeta(1/2) = -1 moved into c.
RootMonomial::RootMonomial(Int c, const Rat& rotation) : c_(std::move(c)) {
  if (sgn(c_) == 0) return;
  r_ = frac_part(rotation);
  if (r_ >= Rat(1, 2)) {
    r_ -= Rat(1, 2);
    c_ = -c_;
  }
}

RootMonomial operator*(const RootMonomial& a, const RootMonomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.c_ * b.c_, a.r_ + b.r_};
}

RootMonomial operator+(const RootMonomial& a, const RootMonomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.r_ != b.r_) throw MathError("sum of distinct roots of unity is not a monomial");
  return {a.c_ + b.c_, a.r_};
}

RootMonomial inverse(const RootMonomial& z) {
  if (abs(z.coeff()) != 1) throw MathError("monomial is not a unit");
  return {z.coeff(), -z.rotation()};
}

std::string RootMonomial::to_string() const {
  if (is_zero()) return "0";
  if (sgn(r_) == 0) return c_.get_str();
  std::string root = "zeta(" + r_.get_str() + ")";
  if (c_ == 1) return root;
  if (c_ == -1) return "-" + root;
  return c_.get_str() + "*" + root;
}

// ---------------------------------------------------------------------------

MetabelianClass::MetabelianClass(const RotationVector& theta) {
  if (theta.is_zero()) throw std::invalid_argument("the zero rotation vector is the abelian character");
  RotationVector neg = theta.negated();
  t_ = std::min(theta, neg);
  order_ = t_.order();
}

Int count_metabelian(const Int& knot_det) {
  if (mpz_even_p(knot_det.get_mpz_t())) throw std::domain_error("even knot determinant: invalid knot data");
  return (abs(knot_det) - 1) / 2;
}

Int count_metabelian(const KnotRecord& k) { return count_metabelian(determinant_of_knot(k)); }

std::vector<MetabelianClass> enumerate_metabelian(const SeifertKnot& k) {
  std::vector<MetabelianClass> out;
  for (const auto& theta : torsion_solutions(k.symmetrized())) {
    if (theta.is_zero()) continue;
    MetabelianClass c(theta);
    if (c.thetas() == theta) out.push_back(std::move(c));  // keep one of each pair
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using MonoMat = Mat2<RootMonomial>;

const MonoMat kIdentity{1, 0, 0, 1};

MonoMat diag_root(const Rat& theta) {
  return {RootMonomial::root(theta), 0, 0, RootMonomial::root(-theta)};
}

MonoMat power(const MonoMat& m, const Int& e) {
  const MonoMat base = sgn(e) < 0 ? mat2_inv_sl2(m, RootMonomial(1)) : m;
  const Int mag = abs(e);
  if (!mag.fits_ulong_p()) throw MathError("exponent too large");
  return mat2_pow(base, mag.get_ui(), kIdentity);
}

}  // namespace

MetabelianRep build_representation(const MetabelianClass& c) {
  MetabelianRep rep{{0, 1, -1, 0}, {}};
  for (const auto& theta : c.thetas().thetas()) rep.generators.push_back(diag_root(theta));
  return rep;
}

ClassVerification verify_class(const SeifertKnot& k, const RotationVector& theta) {
  ClassVerification v;
  const IntMat& V = k.seifert_matrix();
  const std::size_t n = V.rows();
  if (theta.size() != n) {
    v.failures.push_back("rotation vector has " + std::to_string(theta.size()) + " entries, expected " +
                         std::to_string(n));
    return v;
  }
  std::vector<MonoMat> gens;
  for (const auto& t : theta.thetas()) gens.push_back(diag_root(t));
  const MonoMat mu{0, 1, -1, 0};
  const MonoMat mu_inv = mat2_inv_sl2(mu, RootMonomial(1));

  v.sl2_ok = mu.det() == RootMonomial(1);
  for (std::size_t j = 0; j < n && v.sl2_ok; ++j) v.sl2_ok = gens[j].det() == RootMonomial(1);
  if (!v.sl2_ok) v.failures.push_back("an image is not in SL(2)");

  // alpha_i has exponent sums V[i][*], beta_i has V^T[i][*]; both images are
  // products of commuting diagonal matrices.
  v.relation_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    MonoMat alpha = kIdentity, beta = kIdentity;
    for (std::size_t j = 0; j < n; ++j) {
      alpha = alpha * power(gens[j], V(i, j));
      beta = beta * power(gens[j], V(j, i));
    }
    if (!(mu * alpha * mu_inv == beta)) {
      v.relation_ok = false;
      v.failing_row = static_cast<long>(i);
      v.failures.push_back("relation mu alpha_" + std::to_string(i + 1) + " mu^-1 = beta_" + std::to_string(i + 1) +
                           " fails (row " + std::to_string(i) + " of (V+V^T) theta is not integral)");
      break;
    }
  }

  // diag(lambda, lambda^{-1}) has trace 2 iff (lambda - 1)^2 = 0 iff theta = 0.
  for (std::size_t j = 0; j < n; ++j)
    if (sgn(theta[j]) != 0) {
      v.irreducible_ok = true;
      v.witness_generator = static_cast<long>(j);
      break;
    }
  if (!v.irreducible_ok) v.failures.push_back("all generator traces equal 2: the representation is abelian");

  v.trace_free_ok = mu.trace().is_zero();
  if (!v.trace_free_ok) v.failures.push_back("trace(rho(mu)) != 0");
  return v;
}

ClassVerification verify_class(const SeifertKnot& k, const MetabelianClass& c) { return verify_class(k, c.thetas()); }

}  // namespace knotmeta
