#include <random>

#include <doctest.h>

#include "knotmeta/exactalg.hpp"

using namespace knotmeta;

namespace {

UniPoly P(std::initializer_list<long> c) { return UniPoly::from_ints(c); }

UniPoly random_poly(std::mt19937& rng, int max_deg, bool complex_coeffs) {
  std::uniform_int_distribution<int> deg(-1, max_deg), val(-4, 4);
  std::vector<GaussRat> c;
  for (int k = deg(rng); k >= 0; --k)
    c.emplace_back(Rat(val(rng)), complex_coeffs ? Rat(val(rng), 2) : Rat(0));
  return UniPoly(c);
}

}  // namespace

TEST_CASE("GaussRat field operations") {
  const GaussRat i = GaussRat::i();
  CHECK(i * i == GaussRat(-1));
  CHECK(inverse(i) == -i);
  const GaussRat z(Rat(3, 2), Rat(-2));
  CHECK(z * inverse(z) == GaussRat(1));
  CHECK(z.norm() == Rat(25, 4));
  CHECK(i_pow(-1) == -i);
  CHECK(i_pow(6) == GaussRat(-1));
  CHECK(i_pow(-7) == i);
  CHECK_THROWS_AS(inverse(GaussRat()), MathError);
}

TEST_CASE("degree of zero is -inf, distinct from -1") {
  CHECK(UniPoly().degree().is_neg_inf());
  CHECK(UniPoly().degree() != Degree(-1));
  CHECK(UniPoly().degree() < Degree(0));
  CHECK((Degree::neg_inf() + Degree(5)).is_neg_inf());
  CHECK(P({7}).degree() == Degree(0));
  CHECK_THROWS(UniPoly().degree().value());
}

TEST_CASE("poly_mul examples") {
  CHECK(poly_mul(P({1, 1}), P({-1, 1})) == P({-1, 0, 1}));
  CHECK(poly_mul(UniPoly(), P({1, 2, 3})).is_zero());
  CHECK(poly_mul(P({2, 1}), P({3, 1})) == P({6, 5, 1}));
  CHECK(poly_add(P({1, 1}), P({-1, -1})).is_zero());
}

TEST_CASE("poly_gcd examples") {
  CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  CHECK(poly_gcd(P({5, 5, 1}), P({5, 2})) == P({1}));
  const UniPoly p = P({4, 0, 2});
  CHECK(poly_gcd(p, UniPoly()) == p.monic());
  CHECK(poly_gcd(UniPoly(), p) == p.monic());
  CHECK_THROWS_AS(poly_gcd(UniPoly(), UniPoly()), MathError);
}

TEST_CASE("poly_derivative examples") {
  CHECK(poly_derivative(P({5, 5, 1})) == P({5, 2}));
  CHECK(poly_derivative(P({9})).is_zero());
  CHECK(poly_derivative(P({0, 0, 0, 1})) == P({0, 0, 3}));
}

TEST_CASE("poly_rem examples") {
  CHECK(poly_rem(P({0, 0, 1}), P({3, 1})) == P({9}));
  const UniPoly phi = P({5, 5, 1});
  CHECK(poly_rem(phi, phi).is_zero());
  CHECK(poly_rem(P({0, 0, 0, 1}), phi) == P({25, 20}));
  CHECK_THROWS_AS(poly_rem(phi, UniPoly()), MathError);
}

TEST_CASE("division identity p = q*d + r with deg r < deg d") {
  std::mt19937 rng(7);
  for (int it = 0; it < 300; ++it) {
    const UniPoly p = random_poly(rng, 6, true);
    const UniPoly d = random_poly(rng, 3, true);
    if (d.is_zero()) continue;
    const DivMod qr = poly_divmod(p, d);
    CHECK(qr.quot * d + qr.rem == p);
    CHECK(qr.rem.degree() < d.degree());
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    const UniPoly a = random_poly(rng, 4, true), b = random_poly(rng, 4, true), c = random_poly(rng, 4, true);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == UniPoly());
    CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("gcd divides both arguments and is monic") {
  std::mt19937 rng(5);
  for (int it = 0; it < 200; ++it) {
    const UniPoly common = random_poly(rng, 2, false);
    const UniPoly a = random_poly(rng, 3, false) * common, b = random_poly(rng, 3, false) * common;
    if (a.is_zero() && b.is_zero()) continue;
    const UniPoly g = poly_gcd(a, b);
    CHECK(g.leading() == GaussRat(1));
    CHECK(poly_rem(a, g).is_zero());
    CHECK(poly_rem(b, g).is_zero());
    if (!common.is_zero()) CHECK(poly_rem(g, common.monic()).is_zero());
  }
}

TEST_CASE("squarefree and distinct roots") {
  CHECK(is_squarefree(P({5, 5, 1})));
  CHECK_FALSE(is_squarefree(poly_pow(P({-1, 1}), 2)));
  CHECK(distinct_root_count(poly_pow(P({-1, 1}), 3) * poly_pow(P({1, 1}), 2)) == 2);
  CHECK(distinct_root_count(P({1, 0, 1})) == 2);
}

TEST_CASE("residue ring Q(i)[u]/(u^2+5u+5)") {
  const ResidueRing R(P({5, 5, 1}));
  const Residue u = R(P({0, 1}));
  CHECK(u * u == R(P({-5, -5})));
  CHECK(u * u * u == R(P({25, 20})));
  const Residue x = R(P({2, 3}));
  CHECK(x * inverse(x) == R.one());
  CHECK(R(P({5, 5, 1})).is_zero());
  CHECK_THROWS_AS(ResidueRing(P({3})), MathError);
}

TEST_CASE("residue reduction is a ring homomorphism") {
  std::mt19937 rng(13);
  const UniPoly phi = P({7, 14, 7, 1});
  const ResidueRing R(phi);
  for (int it = 0; it < 200; ++it) {
    const UniPoly a = random_poly(rng, 6, true), b = random_poly(rng, 6, true);
    CHECK(R(a) * R(b) == R(a * b));
    CHECK(R(a) + R(b) == R(a + b));
  }
}

TEST_CASE("non-invertible residue throws") {
  const ResidueRing R(P({-1, 0, 1}));
  CHECK_THROWS_AS(inverse(R(P({-1, 1}))), MathError);
}

TEST_CASE("laurent_mul examples") {
  using L = LaurentBiPoly;
  CHECK(L::s_pow(1) * L::s_pow(-1) == L::constant(1));
  CHECK((L::s_pow(2) - L::u()) * L::s_pow(-2) == L::constant(1) - L::u() * L::s_pow(-2));
  const L p = L::monomial(3, -2, 1) + L::monomial(-1, 5, 0);
  CHECK(p * L::constant(1) == p);
  CHECK((p - p).is_zero());
}

TEST_CASE("laurent_eval_s_to_i examples") {
  using L = LaurentBiPoly;
  CHECK(laurent_eval_s_to_i(L::s_pow(2)) == P({-1}));
  CHECK(laurent_eval_s_to_i(L::s_pow(2) - L::u()) == P({-1, -1}));
  CHECK(laurent_eval_s_to_i(L::s_pow(-1)) == UniPoly::constant(-GaussRat::i()));
}

TEST_CASE("laurent evaluation is a ring homomorphism") {
  using L = LaurentBiPoly;
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> e(-3, 3), ue(0, 2), c(-3, 3);
  auto rnd = [&] {
    L p;
    for (int k = 0; k < 4; ++k) p += L::monomial(c(rng), e(rng), ue(rng));
    return p;
  };
  for (int it = 0; it < 200; ++it) {
    const L a = rnd(), b = rnd();
    CHECK(laurent_eval_s_to_i(a * b) == laurent_eval_s_to_i(a) * laurent_eval_s_to_i(b));
    CHECK(laurent_eval_s_to_i(a + b) == laurent_eval_s_to_i(a) + laurent_eval_s_to_i(b));
  }
}

TEST_CASE("laurent pseudo-remainder of a multiple is zero") {
  using L = LaurentBiPoly;
  const L g = L::u() * L::s_pow(2) + L::constant(3) - L::s_pow(-2);
  const L f = g * (L::u() * L::u() - L::s_pow(1));
  CHECK(laurent_pseudo_rem(f, g).is_zero());
  CHECK_FALSE(laurent_pseudo_rem(f + L::constant(1), g).is_zero());
}

TEST_CASE("Mat2 examples") {
  const GaussRat i = GaussRat::i();
  using M = Mat2<UniPoly>;
  const M x1{UniPoly::constant(i), UniPoly::constant(-i), UniPoly(), UniPoly::constant(-i)};
  const M x2{UniPoly::constant(i), UniPoly(), UniPoly::monomial(-i, 1), UniPoly::constant(-i)};
  const M prod = mat2_mul(x1, x2);
  CHECK(prod == M{P({-1, -1}), P({-1}), P({0, -1}), P({-1})});
  const M one = M::scalar(P({1}), UniPoly());
  CHECK(x1 * mat2_inv_sl2(x1, P({1})) == one);
  CHECK(x2 * mat2_inv_sl2(x2, P({1})) == one);

  using G = Mat2<GaussRat>;
  const GaussRat b(Rat(2), Rat(1, 3));
  const G m{GaussRat(), b, -inverse(b), GaussRat()};
  CHECK(m * m == -G::scalar(GaussRat(1), GaussRat()));
  CHECK(m * mat2_inverse(m) == G::scalar(GaussRat(1), GaussRat()));
  CHECK_THROWS(mat2_inv_sl2(G{GaussRat(2), GaussRat(), GaussRat(), GaussRat(2)}, GaussRat(1)));
}
