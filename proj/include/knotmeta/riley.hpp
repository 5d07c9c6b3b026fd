#pragma once

// Riley's normal form for nonabelian representations of 2-bridge knot groups,
//
//   x1 -> (s, s^-1; 0, s^-1),   x2 -> (s, 0; -s u, s^-1),   s^2 = t,
//
// the Riley polynomial phi(t, u) = w11 + (1 - t) w12 of the relator word,
// and exact checks on the trace-free section t = -1 carried out in the
// quotient ring Q(i)[u]/(phi(-1, u)).

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "knotmeta/exactalg.hpp"
#include "knotmeta/knotdata.hpp"

namespace knotmeta {

/// A Riley-side identity that must hold failed (degree, squarefreeness,
/// parity). Carries the diagnostics in what().
class RileyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using LaurentMat = Mat2<LaurentBiPoly>;
using PolyMat = Mat2<UniPoly>;
using ResidueMat = Mat2<Residue>;

struct RileyHolonomy {
  LaurentMat x1;
  LaurentMat x2;

  static RileyHolonomy standard();
};

/// Product of generator images (inverse letters use the adjugate).
LaurentMat word_holonomy(const RileyHolonomy& h, const GroupWord& w);

/// phi(t, u) in the half variable s. Throws RileyError if an odd s-exponent
/// appears.
LaurentBiPoly riley_polynomial(const TwoBridge& k);

/// Generator images at t = -1 (s = i) with entries in Q(i)[u].
PolyMat x1_at_minus_one();
PolyMat x2_at_minus_one();

/// Integer polynomial with content removed and positive leading coefficient.
UniPoly normalize_integral(const UniPoly& p);

struct RileySection {
  long p = 0;
  long q = 0;
  UniPoly phi;        // phi(-1, u), normalized
  UniPoly phi_raw;    // w11 + 2 w12 before normalization
  UniPoly w11;
  UniPoly w12;
  long roots_count = 0;     // degree of phi, with multiplicity
  long distinct_roots = 0;  // deg phi - deg gcd(phi, phi')
  bool squarefree = false;
  bool product_identity_ok = false;  // letter product == (x1 x2)^{(p-1)/2}
  bool s_parity_ok = false;          // phi(t, u) lies in Z[t^{+-1}][u]
};

/// Everything that disagrees with the expected structure; empty when sound.
std::vector<std::string> section_failures(const RileySection& s);

/// Throws RileyError listing section_failures when nonempty.
RileySection section_at_minus_one(const TwoBridge& k);

struct RelatorReport {
  bool ok = false;
  int offending_entry = -1;  // 0..3 for (1,1), (1,2), (2,1), (2,2)
  std::array<UniPoly, 4> residues;
};

/// rho(w) rho(x1) - rho(x2) rho(w) reduced modulo phi(-1, u).
RelatorReport verify_relator_mod_phi(const TwoBridge& k);
/// Same check against an arbitrary modulus (used to show a wrong ideal fails).
RelatorReport verify_relator_mod(const TwoBridge& k, const UniPoly& modulus);

/// Relator check at general t: every entry of rho(w) rho(x1) - rho(x2) rho(w)
/// has zero pseudo-remainder by phi(t, u) over Z[s^{+-1}][u].
RelatorReport verify_relator_general_t(const TwoBridge& k);

enum class IdentityKind { kPlusIdentity, kMinusIdentity, kNeither };

std::string identity_kind_name(IdentityKind k);

struct LongitudeReport {
  IdentityKind kind = IdentityKind::kNeither;
  UniPoly trace;  // trace(rho(lambda)) mod phi
  std::size_t word_length = 0;
  bool ok = false;  // kind == +id
};

LongitudeReport verify_longitude_mod_phi(const TwoBridge& k);

struct CrossCheckReport {
  long riley_degree = 0;
  long distinct_roots = 0;
  Int meta_count;
  long half_p = 0;
  bool ok = false;
  std::vector<std::string> failures;
};

CrossCheckReport cross_check_counts(const TwoBridge& k);

/// Number of distinct real roots of a real polynomial (Sturm's theorem).
long sturm_real_root_count(const UniPoly& p);

/// Display-only approximations of all roots: real roots isolated exactly and
/// refined by bisection, non-real roots by Durand-Kerner iteration.
std::vector<std::complex<double>> approximate_roots(const UniPoly& p);

}  // namespace knotmeta
