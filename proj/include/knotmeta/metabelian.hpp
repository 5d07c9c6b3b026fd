#pragma once

// Irreducible metabelian SL(2, C) characters of a knot group, computed from a
// Seifert matrix. Eigenvalues lambda_j = exp(2 pi i theta_j) are carried as
// exact rotation numbers theta_j in [0, 1).

#include <optional>
#include <string>
#include <vector>

#include "knotmeta/exactalg.hpp"
#include "knotmeta/intlinalg.hpp"
#include "knotmeta/knotdata.hpp"

namespace knotmeta {

/// c * exp(2 pi i r): an integer multiple of a root of unity. Zero when
/// c = 0. Sums are only defined when the result is again a monomial.
class RootMonomial {
 public:
  RootMonomial() = default;
  RootMonomial(long c) : c_(c) {}  // NOLINT(google-explicit-constructor)
  RootMonomial(Int c, const Rat& rotation);

  static RootMonomial root(const Rat& rotation) { return {Int(1), rotation}; }

  const Int& coeff() const { return c_; }
  const Rat& rotation() const { return r_; }
  bool is_zero() const { return sgn(c_) == 0; }

  friend RootMonomial operator*(const RootMonomial& a, const RootMonomial& b);
  /// Throws MathError when a and b are nonzero with different rotations.
  friend RootMonomial operator+(const RootMonomial& a, const RootMonomial& b);
  friend RootMonomial operator-(const RootMonomial& a, const RootMonomial& b) { return a + (-b); }
  friend RootMonomial operator-(const RootMonomial& a) { return {-a.c_, a.r_}; }
  friend bool operator==(const RootMonomial& a, const RootMonomial& b) { return a.c_ == b.c_ && a.r_ == b.r_; }

  /// e.g. "zeta(1/3)", "-1", "0".
  std::string to_string() const;

 private:
  Int c_{0};
  Rat r_{0};  // kept 0 when c_ = 0
};

RootMonomial inverse(const RootMonomial& z);

/// Canonical representative of {theta, -theta mod 1}: the lexicographic minimum.
class MetabelianClass {
 public:
  /// Canonicalizes; throws std::invalid_argument for the zero vector.
  explicit MetabelianClass(const RotationVector& theta);

  const RotationVector& thetas() const { return t_; }
  /// lcm of the denominators: the common order of the eigenvalues.
  const Int& order() const { return order_; }

  friend bool operator==(const MetabelianClass& a, const MetabelianClass& b) { return a.t_ == b.t_; }
  friend auto operator<=>(const MetabelianClass& a, const MetabelianClass& b) { return a.t_ <=> b.t_; }

 private:
  RotationVector t_;
  Int order_;
};

struct MetabelianRep {
  Mat2<RootMonomial> mu_image;                 // [[0, 1], [-1, 0]]
  std::vector<Mat2<RootMonomial>> generators;  // diag(lambda_j, lambda_j^{-1})
};

/// (|det| - 1)/2; throws std::domain_error for an even determinant.
Int count_metabelian(const Int& knot_det);
Int count_metabelian(const KnotRecord& k);

/// Nontrivial solutions of (V + V^T) theta = 0 mod 1, paired under
/// theta ~ -theta, in lexicographic order.
std::vector<MetabelianClass> enumerate_metabelian(const SeifertKnot& k);

MetabelianRep build_representation(const MetabelianClass& c);

struct ClassVerification {
  bool relation_ok = false;      // mu alpha_i mu^{-1} = beta_i for every i
  long failing_row = -1;
  bool irreducible_ok = false;   // some generator has eigenvalue != 1
  long witness_generator = -1;
  bool trace_free_ok = false;    // trace(rho(mu)) = 0
  bool sl2_ok = false;           // every image has determinant 1
  std::vector<std::string> failures;

  bool ok() const { return relation_ok && irreducible_ok && trace_free_ok && sl2_ok; }
};

/// Checks a rotation vector against the knot. Accepts any vector (including
/// non-solutions and the zero vector) so failures can be reported.
ClassVerification verify_class(const SeifertKnot& k, const RotationVector& theta);
ClassVerification verify_class(const SeifertKnot& k, const MetabelianClass& c);

}  // namespace knotmeta
