#include "biq/momentmap.hpp"

#include <algorithm>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

namespace biq::moment {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : IntMatrix(rows, cols, std::vector<long>(rows * cols, 0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<long> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw UsageError("IntMatrix dimensions must be positive");
  if (entries_.size() != rows_ * cols_) throw UsageError("IntMatrix entry count mismatch");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

std::vector<long> IntMatrix::apply(const std::vector<long>& v) const {
  if (v.size() != cols_) {
    throw UsageError("cannot apply a " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                     " matrix to a vector of length " + std::to_string(v.size()));
  }
  std::vector<long> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out[r] += at(r, c) * v[c];
  }
  return out;
}

WeightSet::WeightSet(std::initializer_list<Covector> weights) : weights_(weights) {}
WeightSet::WeightSet(std::vector<Covector> weights) : weights_(std::move(weights)) {}

void WeightSet::add(Covector w) { weights_.push_back(std::move(w)); }

WeightSet WeightSet::merged(const WeightSet& other) const {
  WeightSet out = *this;
  for (const auto& w : other.weights_) out.add(w);
  return out;
}

std::vector<Covector> WeightSet::sorted() const {
  auto out = weights_;
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(BasePoint b) {
  switch (b) {
    case BasePoint::k100:
      return "[1:0:0]";
    case BasePoint::k010:
      return "[0:1:0]";
    case BasePoint::k001:
      return "[0:0:1]";
  }
  return {};
}

std::map<BasePoint, WeightSet> base_weights_cp2() {
  return {
      {BasePoint::k100, {{-1, 1, 0}, {-1, 0, 1}}},
      {BasePoint::k010, {{1, -1, 0}, {0, -1, 1}}},
      {BasePoint::k001, {{1, 0, -1}, {0, 1, -1}}},
  };
}

WeightSet pullback_weights(const IntMatrix& h, const WeightSet& ws) {
  WeightSet out;
  for (const auto& w : ws.weights()) out.add(h.apply(w));
  return out;
}

IntMatrix base_homomorphism() { return IntMatrix(3, 2, {1, 1, 1, 0, 0, 1}); }

std::array<IntMatrix, 3> fiber_homomorphisms() {
  return {IntMatrix(2, 2, {1, -1, -1, 0}), IntMatrix(2, 2, {0, -1, -1, 1}),
          IntMatrix(2, 2, {-1, 0, 0, -1})};
}

Covector fiber_weight() { return {1, -1}; }

std::string to_string(PointKind k) { return k == PointKind::kVertex ? "vertex" : "interior"; }

WeightSet FixedPointData::all_weights() const {
  WeightSet out = horizontal;
  out.add(vertical);
  return out;
}

std::vector<FixedPointData> fixed_point_weights() {
  const auto base = base_weights_cp2();
  const auto to_s = base_homomorphism().transpose();
  const auto phi = fiber_homomorphisms();

  struct Spec {
    const char* label;
    BasePoint base;
    std::size_t fiber;  // index into phi
    int sign;
  };
  // p1/p5 lie over [0:0:1], p2/p4 over [0:1:0], p3/p6 over [1:0:0]; the
  // positive fibre weight belongs to p1, p2, p3.
  const Spec specs[] = {
      {"p1", BasePoint::k001, 0, +1}, {"p2", BasePoint::k010, 1, +1},
      {"p3", BasePoint::k100, 2, +1}, {"p4", BasePoint::k010, 1, -1},
      {"p5", BasePoint::k001, 0, -1}, {"p6", BasePoint::k100, 2, -1},
  };

  std::vector<FixedPointData> out;
  for (const auto& s : specs) {
    FixedPointData fp;
    fp.label = s.label;
    fp.base_point = s.base;
    fp.horizontal = pullback_weights(to_s, base.at(s.base));
    fp.vertical = phi[s.fiber].apply(fiber_weight());
    for (auto& v : fp.vertical) v *= s.sign;
    fp.kind = classify(fp.all_weights());
    out.push_back(std::move(fp));
  }
  return out;
}

PointKind classify(const WeightSet& ws) {
  for (const auto& w : ws.weights()) {
    if (w.size() != 2) throw UsageError("classify expects weights in Z^2");
    if (w[0] == 0 && w[1] == 0) throw UsageError("classify: zero weight");
  }
  if (ws.size() == 0) throw UsageError("classify: empty weight set");
  // A finite set lies in a closed half-plane iff it lies in one whose
  // boundary contains one of its members.
  for (const auto& w : ws.weights()) {
    for (int sign : {1, -1}) {
      const long nx = -w[1] * sign;
      const long ny = w[0] * sign;
      const bool contained = std::all_of(ws.weights().begin(), ws.weights().end(), [&](const Covector& v) {
        return nx * v[0] + ny * v[1] >= 0;
      });
      if (contained) return PointKind::kVertex;
    }
  }
  return PointKind::kInterior;
}

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

/// Counter-clockwise hull without collinear points (monotone chain).
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool strictly_inside(const std::vector<Point2>& hull, const Point2& p) {
  if (hull.size() < 3) return false;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (cross(hull[i], hull[(i + 1) % hull.size()], p) <= 0) return false;
  }
  return true;
}

std::vector<std::string> labels_of_kind(PointKind kind) {
  std::vector<std::string> out;
  for (const auto& fp : fixed_point_weights()) {
    if (fp.kind == kind) out.push_back(fp.label);
  }
  return out;
}

std::vector<Edge> figure_edges() {
  return {
      {"p6", "p1", EdgeStyle::kSolid},  {"p1", "p4", EdgeStyle::kSolid},
      {"p4", "p3", EdgeStyle::kSolid},  {"p3", "p6", EdgeStyle::kSolid},
      {"p4", "p2", EdgeStyle::kDashed}, {"p2", "p6", EdgeStyle::kDashed},
      {"p2", "p5", EdgeStyle::kDashed}, {"p5", "p3", EdgeStyle::kDashed},
      {"p5", "p1", EdgeStyle::kDashed},
  };
}

}  // namespace

bool interior_points_strictly_inside(const PolytopeImage& img) {
  std::vector<Point2> vertices;
  for (const auto& label : labels_of_kind(PointKind::kVertex)) vertices.push_back(img.points.at(label));
  const auto hull = convex_hull(vertices);
  for (const auto& label : labels_of_kind(PointKind::kInterior)) {
    if (!strictly_inside(hull, img.points.at(label))) return false;
  }
  return true;
}

PolytopeImage polytope_image(const std::array<Rational, 3>& params) {
  for (const auto& c : params) {
    if (c <= 0) throw ValidationError("polytope parameters must be positive");
  }
  // Default lattice lengths of the parallel edges (p3,p6), (p2,p5), (p1,p4)
  // are 1, 1 and 4. With fibre length t and base-triangle size a the image
  // has length(p3,p6) = t, length(p2,p5) = a - 2t, length(p1,p4) = a + t.
  const Rational t = params[0];
  const Rational a = 4 * params[2] - t;

  PolytopeImage img;
  img.params = params;
  img.edges = figure_edges();
  img.points["p6"] = {1, 1};
  img.points["p1"] = {1 - a, 1};
  img.points["p3"] = {1 + t, 1 - t};
  img.points["p4"] = {1 + t, 1 - a - t};
  img.points["p2"] = {1, 1 + t - a};
  img.points["p5"] = {1 + 2 * t - a, 1 - t};

  std::vector<Point2> vertices;
  for (const auto& label : labels_of_kind(PointKind::kVertex)) vertices.push_back(img.points.at(label));
  const auto hull = convex_hull(vertices);
  for (const auto& label : labels_of_kind(PointKind::kInterior)) {
    if (!strictly_inside(hull, img.points.at(label))) {
      throw ValidationError("interiority violated: " + label +
                            " is not strictly inside the hull of the vertex points");
    }
  }
  if (a - 2 * t != params[1]) {
    throw ValidationError("parallel edge lengths do not close up: need 4*c = b + 3*a for params a,b,c (got " +
                          biq::to_string(params[0]) + "," + biq::to_string(params[1]) + "," +
                          biq::to_string(params[2]) + ")");
  }
  return img;
}

bool edges_follow_weights(const PolytopeImage& img) {
  std::map<std::string, FixedPointData> data;
  for (auto& fp : fixed_point_weights()) data.emplace(fp.label, fp);
  const auto follows = [&](const std::string& from, const std::string& to) {
    const auto& fp = data.at(from);
    if (fp.kind != PointKind::kVertex) return true;
    const auto& p = img.points.at(from);
    const auto& q = img.points.at(to);
    const Rational dx = q.x - p.x;
    const Rational dy = q.y - p.y;
    const auto weights = fp.all_weights().weights();
    return std::any_of(weights.begin(), weights.end(), [&](const Covector& w) {
      return dx * w[1] - dy * w[0] == 0 && dx * w[0] + dy * w[1] > 0;
    });
  };
  return std::all_of(img.edges.begin(), img.edges.end(),
                     [&](const Edge& e) { return follows(e.from, e.to) && follows(e.to, e.from); });
}

namespace {

nlohmann::json rational_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return biq::to_string(q);
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw UsageError("expected an integer or a rational string in polytope JSON");
}

std::string style_name(EdgeStyle s) { return s == EdgeStyle::kSolid ? "solid" : "dashed"; }

std::string svg_coord(const Rational& q) {
  const Rational px = q * 40;
  if (px.get_den() == 1) return px.get_num().get_str();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", px.get_d());
  return buf;
}

}  // namespace

std::string emit(const PolytopeImage& img, EmitFormat format) {
  if (format == EmitFormat::kJson) {
    nlohmann::json j;
    j["points"] = nlohmann::json::object();
    for (const auto& [label, p] : img.points) {
      j["points"][label] = nlohmann::json::array({rational_json(p.x), rational_json(p.y)});
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : img.edges) j["edges"].push_back(nlohmann::json::array({e.from, e.to, style_name(e.style)}));
    j["weights"] = nlohmann::json::object();
    for (const auto& fp : fixed_point_weights()) {
      auto list = nlohmann::json::array();
      const auto all = fp.all_weights();
      for (const auto& w : all.weights()) list.push_back(nlohmann::json(w));
      j["weights"][fp.label] = list;
    }
    j["params"] = nlohmann::json::array();
    for (const auto& c : img.params) j["params"].push_back(rational_json(c));
    return j.dump(2) + "\n";
  }

  // SVG: fixed viewBox, 40 px per lattice unit, y axis pointing up.
  const auto flip = [](const Rational& y) -> Rational { return -y; };
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-200 -200 400 400\" "
         "width=\"400\" height=\"400\">\n"
      << "  <g stroke=\"black\" stroke-width=\"3\" fill=\"none\">\n";
  for (const auto& e : img.edges) {
    const auto& a = img.points.at(e.from);
    const auto& b = img.points.at(e.to);
    out << "    <line x1=\"" << svg_coord(a.x) << "\" y1=\"" << svg_coord(flip(a.y)) << "\" x2=\""
        << svg_coord(b.x) << "\" y2=\"" << svg_coord(flip(b.y)) << "\"";
    if (e.style == EdgeStyle::kDashed) out << " stroke-dasharray=\"8 6\"";
    out << "/>\n";
  }
  out << "  </g>\n  <g fill=\"black\" font-family=\"sans-serif\" font-size=\"14\">\n";
  for (const auto& [label, p] : img.points) {
    out << "    <circle cx=\"" << svg_coord(p.x) << "\" cy=\"" << svg_coord(flip(p.y))
        << "\" r=\"5\"/>\n";
    out << "    <text x=\"" << svg_coord(p.x + Rational(3, 10)) << "\" y=\""
        << svg_coord(flip(p.y + Rational(3, 10))) << "\">" << label << "</text>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

PolytopeImage parse_polytope_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed polytope JSON: ") + e.what());
  }
  PolytopeImage img;
  try {
    for (const auto& [label, xy] : j.at("points").items()) {
      img.points[label] = {rational_from_json(xy.at(0)), rational_from_json(xy.at(1))};
    }
    for (const auto& e : j.at("edges")) {
      const auto style = e.at(2).get<std::string>();
      if (style != "solid" && style != "dashed") throw UsageError("unknown edge style '" + style + "'");
      img.edges.push_back({e.at(0).get<std::string>(), e.at(1).get<std::string>(),
                           style == "solid" ? EdgeStyle::kSolid : EdgeStyle::kDashed});
    }
    const auto& params = j.at("params");
    if (params.size() != 3) throw UsageError("polytope JSON needs three params");
    for (std::size_t i = 0; i < 3; ++i) img.params[i] = rational_from_json(params.at(i));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed polytope JSON: ") + e.what());
  }
  return img;
}

}  // namespace biq::moment
