#include <doctest.h>

#include <regex>

#include "biq/momentmap.hpp"
#include "oracles.hpp"

using namespace biq;
using namespace biq::moment;

namespace {

std::map<std::string, FixedPointData> by_label() {
  std::map<std::string, FixedPointData> out;
  for (auto& fp : fixed_point_weights()) out.emplace(fp.label, fp);
  return out;
}

std::array<Rational, 3> params(Rational a, Rational b, Rational c) { return {a, b, c}; }

}  // namespace

TEST_CASE("CP^2 weights have zero coordinate sum") {
  const auto base = base_weights_cp2();
  REQUIRE(base.size() == 3);
  for (const auto& [point, ws] : base) {
    CAPTURE(to_string(point));
    REQUIRE(ws.size() == 2);
    for (const auto& w : ws.weights()) CHECK(w[0] + w[1] + w[2] == 0);
  }
  CHECK(base.at(BasePoint::k001) == WeightSet{{1, 0, -1}, {0, 1, -1}});
}

TEST_CASE("the base homomorphism pulls weights back to S") {
  const auto h = base_homomorphism();
  CHECK(h == IntMatrix(3, 2, {1, 1, 1, 0, 0, 1}));
  CHECK(h.transpose().apply({1, 0, -1}) == Covector{1, 0});
  CHECK(h.transpose().apply({0, 1, -1}) == Covector{1, -1});
  CHECK(pullback_weights(IntMatrix::identity(3), base_weights_cp2().at(BasePoint::k100)) ==
        base_weights_cp2().at(BasePoint::k100));
  CHECK_THROWS_AS(h.apply({1, 2, 3}), UsageError);
}

TEST_CASE("fibre homomorphisms") {
  const auto phi = fiber_homomorphisms();
  CHECK(phi[0].apply(fiber_weight()) == Covector{2, -1});
  CHECK(phi[1].apply(fiber_weight()) == Covector{1, -2});
  CHECK(phi[2].apply(fiber_weight()) == Covector{-1, 1});
}

TEST_CASE("the six weight sets") {
  const auto fp = by_label();
  REQUIRE(fp.size() == 6);
  CHECK(fp.at("p1").all_weights() == WeightSet{{1, 0}, {1, -1}, {2, -1}});
  CHECK(fp.at("p2").all_weights() == WeightSet{{0, 1}, {-1, 1}, {1, -2}});
  CHECK(fp.at("p3").all_weights() == WeightSet{{0, -1}, {-1, 0}, {-1, 1}});
  CHECK(fp.at("p4").all_weights() == WeightSet{{0, 1}, {-1, 1}, {-1, 2}});
  CHECK(fp.at("p5").all_weights() == WeightSet{{1, 0}, {1, -1}, {-2, 1}});
  CHECK(fp.at("p6").all_weights() == WeightSet{{0, -1}, {-1, 0}, {1, -1}});
}

TEST_CASE("points over the same base point differ only in the sign of the fibre weight") {
  const auto fp = by_label();
  for (const auto& [a, b] : {std::pair{"p1", "p5"}, {"p2", "p4"}, {"p3", "p6"}}) {
    CAPTURE(a);
    CHECK(fp.at(a).base_point == fp.at(b).base_point);
    CHECK(fp.at(a).horizontal == fp.at(b).horizontal);
    CHECK(fp.at(a).vertical == Covector{-fp.at(b).vertical[0], -fp.at(b).vertical[1]});
  }
}

TEST_CASE("classification agrees with the brute-force cone search") {
  const auto fp = by_label();
  for (const auto& [label, data] : fp) {
    CAPTURE(label);
    CHECK(classify(data.all_weights()) == oracle::brute_force_cone(data.all_weights()));
    CHECK(data.kind == classify(data.all_weights()));
  }
  CHECK(fp.at("p2").kind == PointKind::kInterior);
  CHECK(fp.at("p5").kind == PointKind::kInterior);
  for (const char* v : {"p1", "p3", "p4", "p6"}) CHECK(fp.at(v).kind == PointKind::kVertex);
}

TEST_CASE("classification on small weight sets") {
  CHECK(classify(WeightSet{{1, 0}, {-1, 0}}) == PointKind::kVertex);
  CHECK(classify(WeightSet{{1, 0}, {0, 1}, {-1, -1}}) == PointKind::kInterior);
  CHECK(classify(WeightSet{{1, 0}, {0, 1}, {-1, 0}}) == PointKind::kVertex);
  CHECK(classify(WeightSet{{2, 1}, {-1, 3}, {-1, -4}}) == PointKind::kInterior);
  CHECK_THROWS_AS(classify(WeightSet{{0, 0}, {1, 0}}), UsageError);
  CHECK_THROWS_AS(classify(WeightSet{{1, 0, 0}}), UsageError);
  CHECK_THROWS_AS(classify(WeightSet{}), UsageError);
  // Three weights with entries up to 4 have kernel coefficients up to 32.
  for (long a = -2; a <= 2; ++a) {
    for (long b = -2; b <= 2; ++b) {
      for (long c = -2; c <= 2; ++c) {
        if ((a == 0 && b == 0) || (b == 0 && c == 0)) continue;
        const WeightSet ws{{a, b}, {b, c}, {c - a, -b}};
        if (ws.weights()[2] == Covector{0, 0}) continue;
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK(classify(ws) == oracle::brute_force_cone(ws, 32));
      }
    }
  }
}

TEST_CASE("default polytope coordinates") {
  const auto img = polytope_image();
  const std::map<std::string, Point2> expected{
      {"p1", {-2, 1}}, {"p2", {1, -1}}, {"p3", {2, 0}},
      {"p4", {2, -3}}, {"p5", {0, 0}},  {"p6", {1, 1}},
  };
  CHECK(img.points == expected);
  CHECK(img.edges.size() == 9);
  CHECK(edges_follow_weights(img));
  CHECK(interior_points_strictly_inside(img));
}

TEST_CASE("parallel edges and closure") {
  const auto img = polytope_image(params(Rational(1, 2), Rational(5, 2), Rational(1)));
  const auto& p = img.points;
  const auto dir = [&](const char* a, const char* b) {
    return std::pair{p.at(b).x - p.at(a).x, p.at(b).y - p.at(a).y};
  };
  const auto [x36, y36] = dir("p3", "p6");
  const auto [x25, y25] = dir("p2", "p5");
  const auto [x14, y14] = dir("p1", "p4");
  CHECK(x36 * y25 - y36 * x25 == 0);
  CHECK(x36 * y14 - y36 * x14 == 0);
  // Lattice lengths along the primitive direction (1,-1) or its negative.
  CHECK(abs(x36) == Rational(1, 2));
  CHECK(abs(x25) == Rational(5, 2));
  CHECK(abs(x14) == abs(x25) + 3 * abs(x36));
  CHECK(edges_follow_weights(img));
  CHECK(interior_points_strictly_inside(img));
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(polytope_image(params(0, 1, 1)), ValidationError);
  CHECK_THROWS_AS(polytope_image(params(1, -1, 1)), ValidationError);
  CHECK_THROWS_AS(polytope_image(params(1, 2, 1)), ValidationError);
  try {
    polytope_image(params(100, 1, 1));
    FAIL("expected an interiority violation");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("interiority violated") != std::string::npos);
  }
}

TEST_CASE("collapsing fibres") {
  for (long denom : {10, 100, 1000}) {
    const Rational t(1, denom);
    const auto img = polytope_image(params(t, 4 - 3 * t, 1));
    CHECK(img.points.at("p3").x - img.points.at("p6").x == t);
    CHECK(edges_follow_weights(img));
    CHECK(interior_points_strictly_inside(img));
  }
}

TEST_CASE("edges that leave the weight directions are detected") {
  auto img = polytope_image();
  img.points["p3"] = {3, 0};
  CHECK_FALSE(edges_follow_weights(img));
  auto outside = polytope_image();
  outside.points["p5"] = {-5, -5};
  CHECK_FALSE(interior_points_strictly_inside(outside));
}

TEST_CASE("JSON round trip") {
  for (const auto& ps : {params(1, 1, 1), params(Rational(1, 3), Rational(3), Rational(1))}) {
    const auto img = polytope_image(ps);
    const auto text = emit(img, EmitFormat::kJson);
    CHECK(parse_polytope_json(text) == img);
    CHECK(emit(parse_polytope_json(text), EmitFormat::kJson) == text);
  }
  CHECK_THROWS_AS(parse_polytope_json("{"), UsageError);
  CHECK_THROWS_AS(parse_polytope_json("{\"points\": {}}"), UsageError);
}

TEST_CASE("SVG output") {
  const auto svg = emit(polytope_image(), EmitFormat::kSvg);
  CHECK(svg == emit(polytope_image(), EmitFormat::kSvg));
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>\n") == svg.size() - 7);
  const std::regex line("<line ");
  const std::regex dashed("stroke-dasharray");
  const std::regex circle("<circle ");
  const auto count = [&](const std::regex& r) {
    return std::distance(std::sregex_iterator(svg.begin(), svg.end(), r), std::sregex_iterator());
  };
  CHECK(count(line) == 9);
  CHECK(count(dashed) == 5);
  CHECK(count(circle) == 6);
  // p6 = (1,1) maps to pixel (40,-40).
  CHECK(svg.find("cx=\"40\" cy=\"-40\"") != std::string::npos);
}
