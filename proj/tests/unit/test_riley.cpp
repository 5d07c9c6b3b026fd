#include <random>

#include <doctest.h>

#include "knotmeta/riley.hpp"
#include "oracles.hpp"

using namespace knotmeta;

namespace {

using L = LaurentBiPoly;

UniPoly P(std::initializer_list<long> c) { return UniPoly::from_ints(c); }

UniPoly from_oracle(const oracle::Poly& p) {
  std::vector<GaussRat> c;
  for (auto x : p) c.emplace_back(Rat(static_cast<long>(x)));
  return UniPoly(c);
}

// (x1 x2)^n at t = -1 with the product [[-1-u, -1], [-u, -1]], in integer
// polynomial arithmetic; returns (w11, w12).
std::pair<oracle::Poly, oracle::Poly> oracle_section(long n) {
  using oracle::add;
  using oracle::mul;
  const oracle::Poly a{-1, -1}, b{-1}, c{0, -1}, d{-1};
  oracle::Poly m11{1}, m12{}, m21{}, m22{1};
  for (long k = 0; k < n; ++k) {
    oracle::Poly n11 = add(mul(m11, a), mul(m12, c)), n12 = add(mul(m11, b), mul(m12, d));
    oracle::Poly n21 = add(mul(m21, a), mul(m22, c)), n22 = add(mul(m21, b), mul(m22, d));
    m11 = n11, m12 = n12, m21 = n21, m22 = n22;
  }
  return {m11, m12};
}

template <class F>
void for_each_two_bridge(long p_max, F f) {
  for (long p = 3; p <= p_max; p += 2)
    for (long q = 1; q < p; q += 2)
      if (TwoBridge::valid(p, q)) f(TwoBridge(p, q));
}

}  // namespace

TEST_CASE("word_holonomy examples") {
  const RileyHolonomy h = RileyHolonomy::standard();
  const LaurentMat id = LaurentMat::scalar(L::constant(1), L());
  CHECK(word_holonomy(h, GroupWord()) == id);
  const LaurentMat x1x2 = word_holonomy(h, GroupWord({{1, 1}, {2, 1}}));
  CHECK(x1x2 == LaurentMat{L::s_pow(2) - L::u(), L::s_pow(-2), -L::u(), L::s_pow(-2)});

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> g(1, 2), len(0, 8), e(0, 1);
  for (int it = 0; it < 50; ++it) {
    std::vector<Letter> letters;
    for (int k = len(rng); k > 0; --k) letters.push_back({g(rng), e(rng) ? 1 : -1});
    const GroupWord w(letters);
    CHECK(word_holonomy(h, w * w.inverse()) == id);
  }
}

TEST_CASE("generator images at t = -1") {
  const PolyMat prod = x1_at_minus_one() * x2_at_minus_one();
  CHECK(prod == PolyMat{P({-1, -1}), P({-1}), P({0, -1}), P({-1})});
  const PolyMat id = PolyMat::scalar(P({1}), UniPoly());
  CHECK(mat2_inv_sl2(x1_at_minus_one(), P({1})) == -x1_at_minus_one());
  CHECK(x2_at_minus_one() * mat2_inv_sl2(x2_at_minus_one(), P({1})) == id);
}

TEST_CASE("riley_polynomial examples") {
  const RileySection s31 = section_at_minus_one(TwoBridge(3, 1));
  CHECK(s31.phi_raw == P({-3, -1}));
  CHECK(laurent_eval_s_to_i(riley_polynomial(TwoBridge(3, 1))) == P({-3, -1}));
  CHECK(s31.phi == P({3, 1}));
  CHECK(s31.roots_count == 1);
  CHECK(s31.squarefree);
  CHECK(s31.phi.eval(GaussRat(-3)).is_zero());

  const RileySection s53 = section_at_minus_one(TwoBridge(5, 3));
  CHECK(s53.phi == P({5, 5, 1}));
  CHECK(s53.roots_count == 2);
  CHECK(s53.squarefree);
}

TEST_CASE("riley polynomial lies in Z[t^{+-1}][u]") {
  for_each_two_bridge(25, [](const TwoBridge& k) { CHECK(riley_polynomial(k).s_exponents_even()); });
}

TEST_CASE("section matches the closed-form power oracle") {
  for_each_two_bridge(45, [](const TwoBridge& k) {
    const long n = (k.p() - 1) / 2;
    const auto [w11, w12] = oracle_section(n);
    const RileySection s = section_at_minus_one(k);
    CHECK(s.w11 == from_oracle(w11));
    CHECK(s.w12 == from_oracle(w12));
    CHECK(s.phi_raw == from_oracle(oracle::add(w11, oracle::mul({2}, w12))));
    CHECK(s.w11.degree() == Degree(n));
    CHECK(s.w12.degree() == Degree(n - 1));
    CHECK(s.phi.degree() == Degree(n));
    CHECK(s.squarefree);
    CHECK(s.distinct_roots == n);
  });
}

TEST_CASE("normalize_integral") {
  CHECK(normalize_integral(P({-6, -4, -2})) == P({3, 2, 1}));
  CHECK(normalize_integral(P({-3, -1})) == P({3, 1}));
  CHECK(normalize_integral(UniPoly()).is_zero());
  CHECK_THROWS_AS(normalize_integral(UniPoly::constant(GaussRat(Rat(1, 2)))), MathError);
}

TEST_CASE("relator check mod phi") {
  CHECK(verify_relator_mod_phi(TwoBridge(3, 1)).ok);
  CHECK(verify_relator_mod_phi(TwoBridge(5, 3)).ok);
  // u = -3 directly: phi = u + 3.
  CHECK(verify_relator_mod(TwoBridge(3, 1), P({3, 1})).ok);
}

TEST_CASE("perturbed phi fails the relator check") {
  for (auto k : {TwoBridge(3, 1), TwoBridge(5, 3), TwoBridge(7, 3)}) {
    const UniPoly phi = section_at_minus_one(k).phi;
    const RelatorReport r = verify_relator_mod(k, phi + P({1}));
    CHECK_FALSE(r.ok);
    CHECK(r.offending_entry >= 0);
  }
}

TEST_CASE("relator at general t") {
  for (auto k : {TwoBridge(3, 1), TwoBridge(5, 3), TwoBridge(7, 3), TwoBridge(9, 5), TwoBridge(11, 7)})
    CHECK(verify_relator_general_t(k).ok);
}

TEST_CASE("longitude maps to the identity mod phi") {
  for (auto k : {TwoBridge(3, 1), TwoBridge(5, 3)}) {
    const LongitudeReport r = verify_longitude_mod_phi(k);
    CHECK(r.kind == IdentityKind::kPlusIdentity);
    CHECK(r.ok);
    CHECK(r.trace == P({2}));
  }
}

TEST_CASE("cross_check_counts examples") {
  const auto c31 = cross_check_counts(TwoBridge(3, 1));
  CHECK((c31.riley_degree == 1 && c31.distinct_roots == 1 && c31.meta_count == 1 && c31.ok));
  const auto c53 = cross_check_counts(TwoBridge(5, 3));
  CHECK((c53.riley_degree == 2 && c53.distinct_roots == 2 && c53.meta_count == 2 && c53.ok));
  const auto c = cross_check_counts(TwoBridge(15, 11));
  CHECK((c.riley_degree == 7 && c.distinct_roots == 7 && c.meta_count == 7 && c.ok));
}

TEST_CASE("Sturm count and approximate roots") {
  CHECK(sturm_real_root_count(P({7, 14, 7, 1})) == 3);
  CHECK(sturm_real_root_count(P({1, 0, 1})) == 0);
  CHECK(sturm_real_root_count(poly_pow(P({-1, 1}), 2) * P({2, 1})) == 2);
  const auto roots = approximate_roots(P({5, 5, 1}));
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].real() == doctest::Approx((-5 - std::sqrt(5.0)) / 2).epsilon(1e-12));
  CHECK(roots[1].real() == doctest::Approx((-5 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  const auto cplx = approximate_roots(P({1, 0, 1}));
  REQUIRE(cplx.size() == 2);
  CHECK(std::abs(cplx[0].imag()) == doctest::Approx(1.0).epsilon(1e-9));
}
