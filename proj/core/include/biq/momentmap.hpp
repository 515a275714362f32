#pragma once

// Isotropy weights and momentum image of the two-torus action of
// S(U(1) x U(2)) on the Eschenburg flag SU(3)//T, assembled from the
// horizontal weights on the base CP^2 = G//H and the vertical weights on the
// fibres H/T = CP^1.

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "biq/polyring.hpp"

namespace biq::moment {

class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<long> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  long& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  static IntMatrix identity(std::size_t n);
  IntMatrix transpose() const;
  std::vector<long> apply(const std::vector<long>& v) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<long> entries_;
};

using Covector = std::vector<long>;

/// Multiset of integer covectors; equality ignores order.
class WeightSet {
 public:
  WeightSet() = default;
  WeightSet(std::initializer_list<Covector> weights);
  explicit WeightSet(std::vector<Covector> weights);

  const std::vector<Covector>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  void add(Covector w);
  WeightSet merged(const WeightSet& other) const;
  std::vector<Covector> sorted() const;

  friend bool operator==(const WeightSet& a, const WeightSet& b) { return a.sorted() == b.sorted(); }

 private:
  std::vector<Covector> weights_;
};

enum class BasePoint { k100, k010, k001 };
std::string to_string(BasePoint b);

/// Weights of the standard T^3 action on CP^2 at its three fixed points.
std::map<BasePoint, WeightSet> base_weights_cp2();

/// h applied to every weight (weights as columns).
WeightSet pullback_weights(const IntMatrix& h, const WeightSet& ws);

/// Lie-algebra matrix of S -> T^3 whose transpose pulls CP^2 weights back to S.
IntMatrix base_homomorphism();

/// The homomorphisms S -> T through which S acts on the fibres over
/// [0:0:1], [0:1:0] and [1:0:0].
std::array<IntMatrix, 3> fiber_homomorphisms();

/// Fibre weight of T on H/T = CP^1 at the fixed point identified with p1, p2, p3.
Covector fiber_weight();

enum class PointKind { kVertex, kInterior };
std::string to_string(PointKind k);

struct FixedPointData {
  std::string label;  // "p1" .. "p6"
  BasePoint base_point;
  WeightSet horizontal;
  Covector vertical;
  PointKind kind;

  WeightSet all_weights() const;
};

/// The six fixed points p1..p6 in label order.
std::vector<FixedPointData> fixed_point_weights();

/// Interior iff the weights positively span R^2, i.e. they are not contained
/// in any closed half-plane. Throws UsageError on a zero weight or a weight
/// outside Z^2.
PointKind classify(const WeightSet& ws);

struct Point2 {
  Rational x;
  Rational y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

enum class EdgeStyle { kSolid, kDashed };

struct Edge {
  std::string from;
  std::string to;
  EdgeStyle style;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct PolytopeImage {
  std::map<std::string, Point2> points;
  std::vector<Edge> edges;
  /// Multipliers of the default lengths of the parallel edges
  /// (p3,p6), (p2,p5), (p1,p4).
  std::array<Rational, 3> params{Rational(1), Rational(1), Rational(1)};

  friend bool operator==(const PolytopeImage&, const PolytopeImage&) = default;
};

/// Momentum image with p6 pinned at (1,1). The default parameters reproduce
/// the lattice picture p6=(1,1), p1=(-2,1), p2=(1,-1), p5=(0,0), p3=(2,0),
/// p4=(2,-3). Throws ValidationError when p2 or p5 would leave the interior
/// of the hull of the vertex points, or when the three lengths do not close
/// up (length(p1,p4) = length(p2,p5) + 3 length(p3,p6)).
PolytopeImage polytope_image(const std::array<Rational, 3>& params = {Rational(1), Rational(1),
                                                                        Rational(1)});

/// True iff every edge leaving a vertex-kind point points along a positive
/// multiple of one of that point's weights.
bool edges_follow_weights(const PolytopeImage& img);

/// Strict interiority of the two interior-kind points against the convex
/// hull of the vertex-kind points.
bool interior_points_strictly_inside(const PolytopeImage& img);

enum class EmitFormat { kJson, kSvg };

std::string emit(const PolytopeImage& img, EmitFormat format);
PolytopeImage parse_polytope_json(const std::string& text);

}  // namespace biq::moment
