#pragma once

// A-polynomial analyzer. Polynomials are ingested as data (never computed
// here) and checked against the structure forced on 2-bridge knots: at
// m = sqrt(-1) the evaluation must be a pure power of (l - 1) of degree at
// most (p - 1)/2, with no vertical edge in the Newton polygon.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotmeta/exactalg.hpp"

namespace knotmeta {

struct TwoBridgeTag {
  long p;
  long q;
  friend bool operator==(const TwoBridgeTag&, const TwoBridgeTag&) = default;
};

/// Integer polynomial in (m, l) with the abelian factor l - 1 removed.
class APoly {
 public:
  /// (m-exponent, l-exponent) -> coefficient.
  using Terms = std::map<std::pair<long, long>, Int>;

  /// Validates (nonempty, nonnegative exponents, nonzero coefficients, only
  /// even m-exponents, l - 1 does not divide) and normalizes the overall
  /// sign so the lexicographically first term is positive. Throws
  /// std::invalid_argument on violation.
  APoly(std::string name, Terms terms, std::optional<TwoBridgeTag> tag = std::nullopt,
        std::optional<bool> small = std::nullopt, std::optional<Int> det = std::nullopt);

  const std::string& name() const { return name_; }
  const Terms& terms() const { return terms_; }
  const std::optional<TwoBridgeTag>& two_bridge() const { return tag_; }
  /// User-asserted smallness (no closed essential surface).
  const std::optional<bool>& small() const { return small_; }
  /// Knot determinant |Delta_K(-1)| when supplied with the record.
  const std::optional<Int>& knot_det() const { return det_; }

  long deg_l() const;
  std::string to_string() const;

  friend bool operator==(const APoly&, const APoly&) = default;

 private:
  std::string name_;
  Terms terms_;
  std::optional<TwoBridgeTag> tag_;
  std::optional<bool> small_;
  std::optional<Int> det_;
};

/// A(sqrt(-1), l) as a polynomial in l.
UniPoly eval_at_sqrt_minus_one(const APoly& a);

/// f = l^a (l-1)^b (l+1)^c * residual, residual coprime to l, l-1, l+1.
struct FactorProfile {
  long l_mult = 0;
  long lm1_mult = 0;
  long lp1_mult = 0;
  UniPoly residual;

  UniPoly reconstruct() const;
};

/// Throws MathError on the zero polynomial.
FactorProfile factor_profile(const UniPoly& f);

/// Vertices of the Newton polygon in counter-clockwise order, starting from
/// the lowest-leftmost exponent pair; collinear points are dropped.
std::vector<std::pair<long, long>> newton_polygon(const APoly& a);

/// True iff the Newton polygon has an edge joining two vertices with the
/// same m-exponent.
bool vertical_edge_check(const APoly& a);

struct DegreeBoundReport {
  bool applicable = false;  // two-bridge tag present
  long deg_l = 0;           // deg_l A(m, l)
  long eval_deg_l = 0;      // deg_l A(sqrt(-1), l), -1 if the evaluation vanishes
  bool degrees_agree = false;
  bool vertical_edge = false;
  std::optional<long> bound;  // (p - 1)/2
  std::optional<long> slack;  // bound - deg_l
  long k = 0;                 // multiplicity of l - 1 in the evaluation
  bool pure_lm1_power = false;
  /// deg_l > (det - 1)/2; only set when a determinant is known.
  std::optional<bool> exceeds_metabelian_count;
  bool ok = true;
  std::vector<std::string> failures;
  std::string note;
};

DegreeBoundReport degree_bound_check(const APoly& a);

/// A root l = omega of the evaluation other than 0 and 1.
struct Omega {
  std::string exact;                    // closed form
  std::optional<GaussRat> value;        // when omega is in Q(i)
  std::optional<GaussRat> trace;        // omega + omega^{-1}, when in Q(i)
};

enum class FindingKind { kArcs, kTraceFreeNonMetabelian, kInconclusive, kNone };

std::string finding_kind_name(FindingKind k);

struct Finding {
  FindingKind kind;
  std::string message;
  std::vector<Omega> omegas;
  std::optional<long> residual_degree;  // set when a residual of degree > 2 is left opaque
};

std::vector<Finding> proposition_criteria(const APoly& a);

struct MultiplicityProbe {
  long k = 0;   // multiplicity of l - 1 in A(sqrt(-1), l)
  Int bound;    // (det - 1)/2
  bool holds = true;
  std::string label;
};

/// Conjecture probe, never an assertion: compares k with (det - 1)/2.
/// Throws std::invalid_argument for an even determinant.
MultiplicityProbe metabelian_multiplicity_probe(const APoly& a, const Int& det);

struct AnalyzerReport {
  std::string name;
  long deg_l = 0;
  UniPoly eval_at_i;
  std::optional<FactorProfile> factors;  // absent when eval_at_i = 0
  long k = 0;
  bool has_vertical_edge = false;
  std::vector<std::pair<long, long>> hull;
  DegreeBoundReport bound;
  std::optional<bool> bound_ok;
  std::vector<Finding> criteria;
  std::optional<MultiplicityProbe> probe;
  std::vector<std::string> warnings;
};

/// Runs every check; `det` overrides the record's own determinant.
AnalyzerReport analyze(const APoly& a, std::optional<Int> det = std::nullopt);

}  // namespace knotmeta
