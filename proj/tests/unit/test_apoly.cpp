#include <doctest.h>

#include "knotmeta/apoly.hpp"
#include "knotmeta/knotdata.hpp"

using namespace knotmeta;

namespace {

const std::string kData = KNOTMETA_DATA_DIR;

UniPoly P(std::initializer_list<long> c) { return UniPoly::from_ints(c); }

APoly fixture(const std::string& file) { return load_apolys(kData + "/" + file).at(0); }

}  // namespace

TEST_CASE("eval_at_sqrt_minus_one examples") {
  CHECK(eval_at_sqrt_minus_one(fixture("apoly_trefoil.json")) == P({-1, 1}));
  const UniPoly e820 = eval_at_sqrt_minus_one(fixture("apoly_8_20_surrogate.json"));
  CHECK(e820 == poly_pow(P({-1, 1}), 3) * poly_pow(P({1, 1}), 2));
  CHECK(e820.degree() == Degree(5));
  CHECK_THROWS_AS(APoly("zero", {}), std::invalid_argument);
}

TEST_CASE("APoly validation and sign normalization") {
  CHECK_THROWS_AS(APoly("odd-m", {{{1, 1}, Int(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(APoly("negative", {{{-2, 1}, Int(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(APoly("zero-coeff", {{{0, 1}, Int(0)}}), std::invalid_argument);
  // l - 1 divides: A(m, 1) = 0.
  CHECK_THROWS_AS(APoly("abelian", {{{0, 1}, Int(1)}, {{0, 0}, Int(-1)}}), std::invalid_argument);
  CHECK_THROWS_AS(APoly("even-det", {{{0, 1}, Int(1)}}, std::nullopt, std::nullopt, Int(4)), std::invalid_argument);
  const APoly neg("neg", {{{0, 0}, Int(-1)}, {{2, 1}, Int(-3)}});
  const APoly pos("neg", {{{0, 0}, Int(1)}, {{2, 1}, Int(3)}});
  CHECK(neg == pos);
  CHECK(pos.deg_l() == 1);
}

TEST_CASE("factor_profile") {
  const FactorProfile f = factor_profile(P({0, 0, 1}) * poly_pow(P({-1, 1}), 3) * P({1, 1}) * P({1, 1, 1}));
  CHECK(f.l_mult == 2);
  CHECK(f.lm1_mult == 3);
  CHECK(f.lp1_mult == 1);
  CHECK(f.residual == P({1, 1, 1}));
  CHECK(f.reconstruct() == P({0, 0, 1}) * poly_pow(P({-1, 1}), 3) * P({1, 1}) * P({1, 1, 1}));
  CHECK_THROWS_AS(factor_profile(UniPoly()), MathError);
}

TEST_CASE("vertical_edge_check examples") {
  CHECK_FALSE(vertical_edge_check(fixture("apoly_trefoil.json")));
  CHECK(vertical_edge_check(APoly("artificial", {{{0, 0}, Int(1)}, {{0, 1}, Int(1)}, {{2, 0}, Int(1)}})));
  CHECK_FALSE(vertical_edge_check(fixture("apoly_figure8.json")));
  const auto hull = newton_polygon(fixture("apoly_trefoil.json"));
  CHECK(hull == std::vector<std::pair<long, long>>{{0, 1}, {6, 0}});
}

TEST_CASE("degree_bound_check examples") {
  const auto t = degree_bound_check(fixture("apoly_trefoil.json"));
  CHECK(t.applicable);
  CHECK(t.deg_l == 1);
  CHECK(*t.bound == 1);
  CHECK(*t.slack == 0);
  CHECK(t.k == 1);
  CHECK(t.ok);

  const auto f = degree_bound_check(fixture("apoly_figure8.json"));
  CHECK(f.deg_l == 2);
  CHECK(*f.bound == 2);
  CHECK(*f.slack == 0);
  CHECK(f.k == 2);
  CHECK(f.pure_lm1_power);
  CHECK(f.ok);

  const auto v = degree_bound_check(fixture("apoly_bound_violation.json"));
  CHECK_FALSE(v.ok);
  CHECK(*v.slack == -1);
  CHECK_FALSE(v.failures.empty());
}

TEST_CASE("k equals the (l - 1) multiplicity of the evaluation") {
  for (const char* f : {"apoly_trefoil.json", "apoly_figure8.json", "apoly_8_20_surrogate.json"}) {
    const APoly a = fixture(f);
    CHECK(degree_bound_check(a).k == factor_profile(eval_at_sqrt_minus_one(a)).lm1_mult);
  }
}

TEST_CASE("8_20 numbers: bound does not apply") {
  const APoly a = fixture("apoly_8_20_surrogate.json");
  const auto b = degree_bound_check(a);
  CHECK_FALSE(b.applicable);
  CHECK(b.deg_l == 5);
  CHECK(b.eval_deg_l == 5);
  CHECK(*b.exceeds_metabelian_count);
  CHECK(b.note.find("does not apply") != std::string::npos);
}

TEST_CASE("proposition_criteria examples") {
  const auto f820 = proposition_criteria(fixture("apoly_8_20_surrogate.json"));
  REQUIRE(f820.size() == 1);
  CHECK(f820[0].kind == FindingKind::kTraceFreeNonMetabelian);
  REQUIRE(f820[0].omegas.size() == 1);
  CHECK(*f820[0].omegas[0].value == GaussRat(-1));
  CHECK(*f820[0].omegas[0].trace == GaussRat(-2));

  const auto ft = proposition_criteria(fixture("apoly_trefoil.json"));
  REQUIRE(ft.size() == 1);
  CHECK(ft[0].kind == FindingKind::kNone);
  CHECK(ft[0].message == "no criterion fires");

  // (m^2 + 1)(l^2 + l + 1)
  const APoly arcs("arcs", {{{2, 2}, Int(1)}, {{2, 1}, Int(1)}, {{2, 0}, Int(1)},
                            {{0, 2}, Int(1)}, {{0, 1}, Int(1)}, {{0, 0}, Int(1)}});
  const auto fa = proposition_criteria(arcs);
  REQUIRE(fa.size() == 1);
  CHECK(fa[0].kind == FindingKind::kArcs);
}

TEST_CASE("finding 2 needs smallness") {
  const APoly a = fixture("apoly_8_20_surrogate.json");
  const APoly unflagged(a.name(), a.terms(), std::nullopt, std::nullopt, a.knot_det());
  CHECK(proposition_criteria(unflagged)[0].kind == FindingKind::kInconclusive);
}

TEST_CASE("metabelian_multiplicity_probe examples") {
  const auto p820 = metabelian_multiplicity_probe(fixture("apoly_8_20_surrogate.json"), Int(9));
  CHECK(p820.k == 3);
  CHECK(p820.bound == 4);
  CHECK(p820.holds);
  const auto pt = metabelian_multiplicity_probe(fixture("apoly_trefoil.json"), Int(3));
  CHECK(pt.k == 1);
  CHECK(pt.bound == 1);
  CHECK(pt.holds);
  // (l - 1)^3 with det 3: reported, not an error.
  const APoly tall("tall", {{{0, 3}, Int(1)}, {{0, 2}, Int(-3)}, {{0, 1}, Int(3)}, {{2, 0}, Int(1)}});
  const auto pc = metabelian_multiplicity_probe(tall, Int(3));
  CHECK_FALSE(pc.holds);
  CHECK(pc.label.find("conjecture counterexample") != std::string::npos);
}

TEST_CASE("analyze assembles the report") {
  const auto r = analyze(fixture("apoly_8_20_surrogate.json"));
  CHECK(r.deg_l == 5);
  CHECK(r.k == 3);
  REQUIRE(r.factors.has_value());
  CHECK(r.factors->lp1_mult == 2);
  CHECK_FALSE(r.bound_ok.has_value());
  REQUIRE(r.probe.has_value());
  CHECK(r.probe->bound == 4);
  const auto t = analyze(fixture("apoly_trefoil.json"));
  CHECK(t.bound_ok == std::optional<bool>(true));
}
