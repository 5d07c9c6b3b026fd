#include <random>

#include <doctest.h>

#include "knotmeta/intlinalg.hpp"
#include "oracles.hpp"

using namespace knotmeta;

namespace {

IntMat from_oracle(const oracle::Matrix& m) {
  std::vector<std::vector<Int>> rows;
  for (const auto& r : m) {
    rows.emplace_back();
    for (auto x : r) rows.back().emplace_back(static_cast<long>(x));
  }
  return IntMat::from_rows(rows);
}

RotationVector rv(std::initializer_list<std::pair<long, long>> fr) {
  std::vector<Rat> t;
  for (auto [n, d] : fr) {
    Rat r(n, d);
    r.canonicalize();
    t.push_back(r);
  }
  return RotationVector(t);
}

oracle::Matrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> e(-5, 5);
  oracle::Matrix m(n, oracle::Row(n));
  for (auto& r : m)
    for (auto& x : r) x = e(rng);
  return m;
}

}  // namespace

TEST_CASE("det examples") {
  CHECK(det(IntMat::from_rows({{-2, 1}, {1, -2}})) == 3);
  CHECK(det(IntMat::identity(4)) == 1);
  CHECK(det(IntMat::from_rows({{2, 1}, {1, -2}})) == -5);
  CHECK(det(IntMat::from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(det(IntMat::from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("Bareiss det matches cofactor expansion") {
  std::mt19937 rng(23);
  for (int it = 0; it < 300; ++it) {
    const auto m = random_matrix(rng, 1 + it % 4);
    CHECK(det(from_oracle(m)) == static_cast<long>(oracle::det(m)));
  }
}

TEST_CASE("smith_normal_form examples") {
  CHECK(smith_normal_form(IntMat::from_rows({{2, 0}, {0, 3}})).D == IntMat::from_rows({{1, 0}, {0, 6}}));
  const auto id = smith_normal_form(IntMat::identity(3));
  CHECK(id.D == IntMat::identity(3));
  CHECK(id.U * IntMat::identity(3) * id.Vt == id.D);
  CHECK(smith_normal_form(IntMat::from_rows({{-2, 1}, {1, -2}})).D == IntMat::from_rows({{1, 0}, {0, 3}}));
}

TEST_CASE("SNF invariants on random matrices") {
  std::mt19937 rng(29);
  for (int it = 0; it < 300; ++it) {
    const IntMat w = from_oracle(random_matrix(rng, 1 + it % 4));
    const SnfResult s = smith_normal_form(w);
    CHECK(s.U * w * s.Vt == s.D);
    CHECK(abs(det(s.U)) == 1);
    CHECK(abs(det(s.Vt)) == 1);
    const auto d = s.diagonal();
    for (std::size_t i = 0; i < w.rows(); ++i)
      for (std::size_t j = 0; j < w.cols(); ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(sgn(d[i]) >= 0);
      if (sgn(d[i]) == 0) CHECK(sgn(d[i + 1]) == 0);
      else CHECK(Int(d[i + 1] % d[i]) == 0);
    }
    Int prod = 1;
    for (const auto& x : d) prod *= x;
    CHECK(prod == abs(det(w)));
  }
}

TEST_CASE("torsion_solutions examples") {
  CHECK(torsion_solutions(IntMat::from_rows({{2}})) == std::vector{rv({{0, 1}}), rv({{1, 2}})});
  CHECK(torsion_solutions(IntMat::identity(3)) == std::vector{rv({{0, 1}, {0, 1}, {0, 1}})});
  CHECK(torsion_solutions(IntMat::from_rows({{-2, 1}, {1, -2}})) ==
        std::vector{rv({{0, 1}, {0, 1}}), rv({{1, 3}, {2, 3}}), rv({{2, 3}, {1, 3}})});
  CHECK_THROWS_AS(torsion_solutions(IntMat::from_rows({{1, 2}, {2, 4}})), MathError);
}

TEST_CASE("torsion_solutions matches brute force") {
  std::mt19937 rng(31);
  int tested = 0;
  while (tested < 120) {
    const auto m = random_matrix(rng, 1 + tested % 3);
    const std::int64_t d = oracle::det(m);
    if (d == 0 || std::abs(d) > 30) continue;
    ++tested;
    const std::int64_t n = std::abs(d);
    std::vector<RotationVector> expected;
    for (const auto& k : oracle::torsion_numerators(m, n)) {
      std::vector<Rat> t;
      for (auto x : k) {
        Rat r(static_cast<long>(x), static_cast<long>(n));
        r.canonicalize();
        t.push_back(r);
      }
      expected.emplace_back(t);
    }
    const auto got = torsion_solutions(from_oracle(m));
    CHECK(got.size() == static_cast<std::size_t>(n));
    CHECK(got == expected);
  }
}

TEST_CASE("RotationVector reduces mod 1 and orders") {
  const RotationVector a = rv({{4, 3}, {-1, 3}});
  CHECK(a == rv({{1, 3}, {2, 3}}));
  CHECK(a.negated() == rv({{2, 3}, {1, 3}}));
  CHECK(a.order() == 3);
  CHECK(rv({{1, 2}, {1, 3}}).order() == 6);
  CHECK(rv({{0, 1}}).is_zero());
  CHECK(a < a.negated());
}

TEST_CASE("first_nonintegral_row") {
  const IntMat w = IntMat::from_rows({{-2, 1}, {1, -2}});
  CHECK(first_nonintegral_row(w, rv({{1, 3}, {2, 3}})) == -1);
  CHECK(first_nonintegral_row(w, rv({{1, 4}, {1, 4}})) == 0);
}
