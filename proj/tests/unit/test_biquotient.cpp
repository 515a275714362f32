#include <doctest.h>

#include "biq/biquotient.hpp"
#include "biq/groebner.hpp"
#include "oracles.hpp"

using namespace biq;

namespace {

std::vector<Rational> Q(std::initializer_list<long> values) {
  std::vector<Rational> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("group parameter ranges") {
  CHECK_THROWS_AS((GroupSpec{Family::kSU, 2}.validate()), UsageError);
  CHECK_NOTHROW((GroupSpec{Family::kSU, 3}.validate()));
  CHECK_THROWS_AS((GroupSpec{Family::kSp, 1}.validate()), UsageError);
  CHECK_THROWS_AS((GroupSpec{Family::kSpinOdd, 1}.validate()), UsageError);
  CHECK_THROWS_AS((GroupSpec{Family::kSpinEven, 3}.validate()), UsageError);
  CHECK_NOTHROW((GroupSpec{Family::kSpinEven, 4}.validate()));
  CHECK_THROWS_AS((GroupSpec{Family::kSp, 9}.validate()), UsageError);
}

TEST_CASE("closed-form dimensions") {
  CHECK((GroupSpec{Family::kSU, 3}.half_dimension()) == 3);
  CHECK((GroupSpec{Family::kSp, 4}.half_dimension()) == 16);
  CHECK((GroupSpec{Family::kSpinOdd, 3}.half_dimension()) == 9);
  CHECK((GroupSpec{Family::kSpinEven, 4}.half_dimension()) == 12);
  CHECK((GroupSpec{Family::kSU, 6}.weyl_group_order()) == 720);
  CHECK((GroupSpec{Family::kSp, 3}.weyl_group_order()) == 48);
  CHECK((GroupSpec{Family::kSpinEven, 5}.weyl_group_order()) == 1920);
  CHECK((GroupSpec{Family::kSpinEven, 4}.name()) == "Spin(8)");
  CHECK((GroupSpec{Family::kSpinOdd, 2}.name()) == "Spin(5)");
}

TEST_CASE("selector parsing") {
  CHECK(parse_family("su") == Family::kSU);
  CHECK(parse_family("spin-odd") == Family::kSpinOdd);
  CHECK(parse_family("spin-even") == Family::kSpinEven);
  CHECK_THROWS_AS(parse_family("g2"), UsageError);
  const GroupSpec su5{Family::kSU, 5};
  CHECK(parse_torus("s21", su5, std::nullopt) == TorusSpec{TorusKind::kFirst, 2});
  CHECK(parse_torus("s2", su5, 2u) == TorusSpec{TorusKind::kSecond, 2});
  CHECK(parse_torus("s12", su5, std::nullopt).name(su5) == "s12");
  CHECK_THROWS_AS(parse_torus("s31", su5, std::nullopt), UsageError);
  CHECK_THROWS_AS(parse_torus("s21", su5, 1u), UsageError);
  CHECK_THROWS_AS(parse_torus("eschenburg", su5, std::nullopt), UsageError);
  const GroupSpec sp3{Family::kSp, 3};
  CHECK_THROWS_AS(parse_torus("s12", sp3, std::nullopt), UsageError);
  CHECK_THROWS_AS(parse_torus("s1", sp3, 1u), UsageError);
  CHECK_THROWS_AS(parse_torus("s3", sp3, std::nullopt), UsageError);
}

TEST_CASE("torus embeddings for Sp(n)") {
  const GroupSpec sp3{Family::kSp, 3};
  const auto s1 = torus_embedding(sp3, {TorusKind::kFirst, 1});
  REQUIRE(s1.cols == 3);
  CHECK(s1.column(0) == Q({0, 0, 1, 0, 0, 0}));
  CHECK(s1.column(1) == Q({0, 0, 0, 1, 0, -1}));
  CHECK(s1.column(2) == Q({0, 0, 0, 0, 1, -1}));
  const auto s2 = torus_embedding(sp3, {TorusKind::kSecond, 1});
  CHECK(s2.column(0) == Q({1, 1, 1, 0, 0, 0}));
  CHECK(s2.column(1) == Q({0, 0, 0, 1, 0, 0}));
  CHECK(s2.column(2) == Q({0, 0, 0, 0, 1, 0}));
  CHECK(s1.rank() == 3);
  CHECK(s2.rank() == 3);
}

TEST_CASE("Eschenburg torus embedding") {
  const GroupSpec su3{Family::kSU, 3};
  const auto e = torus_embedding(su3, {TorusKind::kEschenburg, 1});
  REQUIRE(e.cols == 2);
  CHECK(e.column(0) == Q({2, 0, 0, 1, 0, 1}));
  CHECK(e.column(1) == Q({0, 0, 0, 1, -1, 0}));
}

TEST_CASE("SU embeddings are traceless per factor with full rank") {
  for (const auto& [g, t] : classified_cases(2, 5)) {
    if (g.family != Family::kSU) continue;
    const auto e = torus_embedding(g, t);
    CAPTURE(g.name());
    CAPTURE(t.name(g));
    CHECK(e.cols == g.rank());
    CHECK(e.rank() == g.rank());
    for (std::size_t c = 0; c < e.cols; ++c) {
      Rational left = 0;
      Rational right = 0;
      for (std::size_t j = 0; j < g.n; ++j) {
        left += e.at(j, c);
        right += e.at(g.n + j, c);
      }
      CHECK(left == 0);
      CHECK(right == 0);
    }
  }
}

TEST_CASE("Weyl invariant generators") {
  const auto sp2 = weyl_generators({Family::kSp, 2});
  const auto y = sp2.front().context();
  REQUIRE(sp2.size() == 2);
  CHECK(sp2[0] == Polynomial::parse(y, "y1^2 + y2^2"));
  CHECK(sp2[1] == Polynomial::parse(y, "y1^2*y2^2"));

  const auto su3 = weyl_generators({Family::kSU, 3});
  REQUIRE(su3.size() == 2);
  CHECK(su3[0].is_homogeneous(4));
  CHECK(su3[1].is_homogeneous(6));

  const auto spin8 = weyl_generators({Family::kSpinEven, 4});
  const auto z = spin8.front().context();
  REQUIRE(spin8.size() == 4);
  CHECK(spin8[0] == Polynomial::parse(z, "y1^2 + y2^2 + y3^2 + y4^2"));
  CHECK(spin8[3] == Polynomial::parse(z, "y1*y2*y3*y4"));
}

TEST_CASE("presentations") {
  const auto sp2 = cohomology_presentation({Family::kSp, 2}, {TorusKind::kFirst, 1});
  CHECK(sp2.m == 4);
  REQUIRE(sp2.relations.size() == 2);
  CHECK(sp2.relations[0] == Polynomial::parse(sp2.context, "x1^2 - 2*x2^2"));
  CHECK(sp2.relations[1] == Polynomial::parse(sp2.context, "-x2^4"));

  CHECK(cohomology_presentation({Family::kSU, 3}, {TorusKind::kSecond, 1}).m == 3);
  CHECK(cohomology_presentation({Family::kSpinEven, 4}, {TorusKind::kFirst, 1}).m == 12);

  const auto esch = cohomology_presentation({Family::kSU, 3}, {TorusKind::kEschenburg, 1});
  REQUIRE(esch.relations.size() == 2);
  CHECK(esch.relations[0].is_homogeneous(4));
  CHECK(esch.relations[1].is_homogeneous(6));
  CHECK_FALSE(esch.relations[0].is_zero());
  CHECK_FALSE(esch.relations[1].is_zero());
}

TEST_CASE("Eschenburg and s12 presentations define the same quotient") {
  const auto esch = cohomology_presentation({Family::kSU, 3}, {TorusKind::kEschenburg, 1});
  const auto s12 = cohomology_presentation({Family::kSU, 3}, {TorusKind::kSecond, 1});
  const auto a = buchberger(esch.relations, esch.context);
  const auto b = buchberger(s12.relations, s12.context);
  for (unsigned d = 0; d <= 6; ++d) CHECK(graded_quotient_dim(a, d) == graded_quotient_dim(b, d));
}

TEST_CASE("every classified presentation is a homogeneous complete intersection") {
  for (const auto& [g, t] : classified_cases(2, 5)) {
    const auto pres = cohomology_presentation(g, t);
    CAPTURE(g.name());
    CAPTURE(t.name(g));
    CHECK(pres.context->size() == g.rank());
    CHECK(pres.relations.size() == g.rank());
    for (const auto& r : pres.relations) {
      CHECK(r.is_homogeneous());
      CHECK_FALSE(r.is_zero());
    }
    CHECK(pres.socle_degree() == 2 * static_cast<long>(pres.m));
    CHECK(pres.m == g.half_dimension());
  }
}

TEST_CASE("classified case list") {
  const auto rank_le_5 = classified_cases(2, 5);
  // SU(3..6): 2 + 4 + 4 + 6; Sp and Spin(2n+1) for n = 2..5: 8 each; Spin(8), Spin(10): 4.
  CHECK(rank_le_5.size() == 16 + 8 + 8 + 4);
  CHECK(classified_cases(5, 5).size() == 12);
}

TEST_CASE("Sp(n) and Spin(2n+1) give identical relations") {
  for (unsigned n = 2; n <= 5; ++n) {
    for (auto kind : {TorusKind::kFirst, TorusKind::kSecond}) {
      const auto sp = cohomology_presentation({Family::kSp, n}, {kind, 1});
      const auto spin = cohomology_presentation({Family::kSpinOdd, n}, {kind, 1});
      REQUIRE(sp.relations.size() == spin.relations.size());
      for (std::size_t i = 0; i < sp.relations.size(); ++i) {
        CHECK(sp.relations[i].to_string() == spin.relations[i].to_string());
      }
    }
  }
}
