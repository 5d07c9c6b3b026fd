#include "knotmeta/riley.hpp"

#include "knotmeta/metabelian.hpp"

namespace knotmeta {

RileyHolonomy RileyHolonomy::standard() {
  using L = LaurentBiPoly;
  const L s = L::s_pow(1), s_inv = L::s_pow(-1);
  return {{s, s_inv, L(), s_inv}, {s, L(), -(s * L::u()), s_inv}};
}

LaurentMat word_holonomy(const RileyHolonomy& h, const GroupWord& w) {
  const LaurentBiPoly one = LaurentBiPoly::constant(1);
  const LaurentMat x1_inv = mat2_inv_sl2(h.x1, one);
  const LaurentMat x2_inv = mat2_inv_sl2(h.x2, one);
  LaurentMat acc = LaurentMat::scalar(one, LaurentBiPoly());
  for (const auto& l : w.letters()) {
    const LaurentMat& g = l.gen == 1 ? (l.exp > 0 ? h.x1 : x1_inv) : (l.exp > 0 ? h.x2 : x2_inv);
    acc = acc * g;
  }
  return acc;
}

LaurentBiPoly riley_polynomial(const TwoBridge& k) {
  const LaurentMat w = word_holonomy(RileyHolonomy::standard(), relator_word(k));
  const LaurentBiPoly one_minus_t = LaurentBiPoly::constant(1) - LaurentBiPoly::s_pow(2);
  LaurentBiPoly phi = w.a + one_minus_t * w.b;
  if (!phi.s_exponents_even())
    throw RileyError("Riley polynomial of " + k.name() + " has an odd power of s: not in Z[t^{+-1}][u]");
  return phi;
}

PolyMat x1_at_minus_one() {
  const GaussRat i = GaussRat::i();
  return {UniPoly::constant(i), UniPoly::constant(-i), UniPoly(), UniPoly::constant(-i)};
}

PolyMat x2_at_minus_one() {
  const GaussRat i = GaussRat::i();
  return {UniPoly::constant(i), UniPoly(), UniPoly::monomial(-i, 1), UniPoly::constant(-i)};
}

UniPoly normalize_integral(const UniPoly& p) {
  if (p.is_zero()) return p;
  if (!p.is_integral_real()) throw MathError("normalize_integral: coefficients are not rational integers");
  Int content = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.re().get_num_mpz_t());
  if (sgn(p.leading().re()) < 0) content = -content;
  return p.scaled(GaussRat(Rat(1) / Rat(content)));
}

namespace {

PolyMat eval_mat(const LaurentMat& m) {
  return m.map([](const LaurentBiPoly& x) { return laurent_eval_s_to_i(x); });
}

ResidueMat to_residues(const PolyMat& m, const ResidueRing& ring) {
  return m.map([&ring](const UniPoly& x) { return ring(x); });
}

ResidueMat residue_word(const GroupWord& w, const ResidueRing& ring) {
  const ResidueMat x1 = to_residues(x1_at_minus_one(), ring);
  const ResidueMat x2 = to_residues(x2_at_minus_one(), ring);
  const ResidueMat x1_inv = mat2_inv_sl2(x1, ring.one());
  const ResidueMat x2_inv = mat2_inv_sl2(x2, ring.one());
  ResidueMat acc = ResidueMat::scalar(ring.one(), ring.zero());
  for (const auto& l : w.letters()) acc = acc * (l.gen == 1 ? (l.exp > 0 ? x1 : x1_inv) : (l.exp > 0 ? x2 : x2_inv));
  return acc;
}

}  // namespace

std::vector<std::string> section_failures(const RileySection& s) {
  std::vector<std::string> f;
  const long half = (s.p - 1) / 2;
  auto deg = [](const UniPoly& x) { return x.degree().to_string(); };
  if (!s.s_parity_ok) f.push_back("phi(t,u) has an odd power of s");
  if (s.w11.degree() != Degree(half)) f.push_back("deg_u w11(-1,u) = " + deg(s.w11) + ", expected " + std::to_string(half));
  if (s.w12.degree() != Degree(half - 1))
    f.push_back("deg_u w12(-1,u) = " + deg(s.w12) + ", expected " + std::to_string(half - 1));
  if (s.phi.degree() != Degree(half)) f.push_back("deg_u phi(-1,u) = " + deg(s.phi) + ", expected " + std::to_string(half));
  if (!s.phi.is_zero() && abs(s.phi.leading().re()) != 1) f.push_back("leading coefficient of phi(-1,u) is not +-1");
  if (!s.squarefree) f.push_back("phi(-1,u) = " + s.phi.to_string() + " has a repeated root");
  if (!s.product_identity_ok) f.push_back("letter product differs from (rho(x1) rho(x2))^((p-1)/2)");
  return f;
}

RileySection section_at_minus_one(const TwoBridge& k) {
  RileySection s;
  s.p = k.p();
  s.q = k.q();
  const LaurentMat w = word_holonomy(RileyHolonomy::standard(), relator_word(k));
  const LaurentBiPoly one_minus_t = LaurentBiPoly::constant(1) - LaurentBiPoly::s_pow(2);
  const LaurentBiPoly phi_t = w.a + one_minus_t * w.b;
  s.s_parity_ok = phi_t.s_exponents_even();

  const PolyMat w_at = eval_mat(w);
  s.w11 = w_at.a;
  s.w12 = w_at.b;
  s.phi_raw = laurent_eval_s_to_i(phi_t);
  s.phi = normalize_integral(s.phi_raw);
  s.roots_count = s.phi.is_zero() ? 0 : s.phi.degree().value();
  s.squarefree = is_squarefree(s.phi);
  s.distinct_roots = s.phi.is_zero() ? 0 : distinct_root_count(s.phi);

  const PolyMat x1x2 = x1_at_minus_one() * x2_at_minus_one();
  const PolyMat id = PolyMat::scalar(UniPoly::constant(1), UniPoly());
  s.product_identity_ok = mat2_pow(x1x2, static_cast<unsigned long>((k.p() - 1) / 2), id) == w_at;

  const auto failures = section_failures(s);
  if (!failures.empty()) {
    std::string msg = k.name() + ":";
    for (const auto& f : failures) msg += " " + f + ";";
    throw RileyError(msg);
  }
  return s;
}

RelatorReport verify_relator_mod(const TwoBridge& k, const UniPoly& modulus) {
  const ResidueRing ring(modulus);
  const ResidueMat w = residue_word(relator_word(k), ring);
  const ResidueMat x1 = to_residues(x1_at_minus_one(), ring);
  const ResidueMat x2 = to_residues(x2_at_minus_one(), ring);
  const ResidueMat diff = w * x1 - x2 * w;
  RelatorReport r;
  r.residues = {diff.a.value(), diff.b.value(), diff.c.value(), diff.d.value()};
  for (int e = 0; e < 4; ++e)
    if (!r.residues[static_cast<std::size_t>(e)].is_zero()) {
      r.offending_entry = e;
      break;
    }
  r.ok = r.offending_entry < 0;
  return r;
}

RelatorReport verify_relator_mod_phi(const TwoBridge& k) {
  return verify_relator_mod(k, section_at_minus_one(k).phi);
}

RelatorReport verify_relator_general_t(const TwoBridge& k) {
  const RileyHolonomy h = RileyHolonomy::standard();
  const LaurentMat w = word_holonomy(h, relator_word(k));
  const LaurentBiPoly phi = riley_polynomial(k);
  const LaurentMat diff = w * h.x1 - h.x2 * w;
  RelatorReport r;
  const std::array<const LaurentBiPoly*, 4> entries{&diff.a, &diff.b, &diff.c, &diff.d};
  for (int e = 0; e < 4; ++e) {
    const LaurentBiPoly rem = laurent_pseudo_rem(*entries[static_cast<std::size_t>(e)], phi);
    r.residues[static_cast<std::size_t>(e)] = laurent_eval_s_to_i(rem);
    if (!rem.is_zero() && r.offending_entry < 0) r.offending_entry = e;
  }
  r.ok = r.offending_entry < 0;
  return r;
}

std::string identity_kind_name(IdentityKind k) {
  switch (k) {
    case IdentityKind::kPlusIdentity: return "+id";
    case IdentityKind::kMinusIdentity: return "-id";
    case IdentityKind::kNeither: return "neither";
  }
  return "neither";
}

LongitudeReport verify_longitude_mod_phi(const TwoBridge& k) {
  const ResidueRing ring(section_at_minus_one(k).phi);
  const GroupWord lambda = longitude_word(k);
  const ResidueMat m = residue_word(lambda, ring);
  LongitudeReport r;
  r.word_length = lambda.size();
  r.trace = m.trace().value();
  const ResidueMat id = ResidueMat::scalar(ring.one(), ring.zero());
  if (m == id) r.kind = IdentityKind::kPlusIdentity;
  else if (m == -id) r.kind = IdentityKind::kMinusIdentity;
  r.ok = r.kind == IdentityKind::kPlusIdentity;
  return r;
}

CrossCheckReport cross_check_counts(const TwoBridge& k) {
  CrossCheckReport r;
  r.half_p = (k.p() - 1) / 2;
  r.meta_count = count_metabelian(determinant_of_knot(k));
  try {
    const RileySection s = section_at_minus_one(k);
    r.riley_degree = s.roots_count;
    r.distinct_roots = s.distinct_roots;
  } catch (const RileyError& e) {
    r.failures.emplace_back(e.what());
  }
  if (r.riley_degree != r.half_p) r.failures.push_back("deg phi(-1,u) != (p-1)/2");
  if (r.distinct_roots != r.half_p) r.failures.push_back("distinct roots of phi(-1,u) != (p-1)/2");
  if (r.meta_count != r.half_p) r.failures.push_back("metabelian census != (p-1)/2");
  r.ok = r.failures.empty();
  return r;
}

}  // namespace knotmeta
