#pragma once

// Equal-rank torus biquotients G//S of the compact simply connected simple
// groups SU(n), Spin(2n+1), Sp(n) and Spin(2n), together with the
// presentation of their rational cohomology as S(s*)/(i*(sigma_j x 1 - 1 x sigma_j)).

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <string>
#include <vector>

#include "biq/polyring.hpp"

namespace biq {

enum class Family { kSU, kSpinOdd, kSp, kSpinEven };

struct GroupSpec {
  Family family = Family::kSU;
  unsigned n = 3;

  /// Throws UsageError unless n is in the classified range for the family.
  void validate() const;
  unsigned rank() const { return family == Family::kSU ? n - 1 : n; }
  /// Number of diagonal torus coordinates y1..yN per factor.
  unsigned ambient_coordinates() const { return n; }
  unsigned dimension() const;
  /// Order of the Weyl group, which is also the total Betti number of G//S.
  unsigned long long weyl_group_order() const;
  /// Half the real dimension of G//S: (dim G - rank G) / 2.
  unsigned half_dimension() const { return (dimension() - rank()) / 2; }
  std::string name() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// kFirst / kSecond are s_{k1} / s_{k2} for SU(n) and s_1 / s_2 for the other
/// families. kEschenburg is the SU(3) torus with basis (2,0,0;1,0,1),
/// (0,0,0;1,-1,0), whose action has the same orbits as s_{12}.
enum class TorusKind { kFirst, kSecond, kEschenburg };

struct TorusSpec {
  TorusKind kind = TorusKind::kFirst;
  /// Only meaningful for SU(n) with kFirst/kSecond: 1 <= k <= floor(n/2).
  unsigned k = 1;

  void validate_for(const GroupSpec& g) const;
  std::string name(const GroupSpec& g) const;

  friend bool operator==(const TorusSpec&, const TorusSpec&) = default;
};

/// Parses selectors such as `su`, `sp`, `spin-odd`, `spin-even`.
Family parse_family(std::string_view text);
std::string family_name(Family f);

/// Accepts `s1`, `s2`, `eschenburg`, and for SU the indexed form `s<k><j>`
/// (e.g. `s12` for k = 1, second family). `k` applies to the bare forms.
TorusSpec parse_torus(std::string_view text, const GroupSpec& g, std::optional<unsigned> k);

/// Rational matrix of i: s -> t x t. Row j < N is y_j on the left factor,
/// row N + j is y_j on the right factor; column c is the c-th basis vector.
struct TorusEmbedding {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> entries;  // row-major

  const Rational& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  Rational& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  std::vector<Rational> column(std::size_t c) const;
  /// Exact rank over Q.
  std::size_t rank() const;
};

TorusEmbedding torus_embedding(const GroupSpec& g, const TorusSpec& t);

/// Ring y1..y(2N): left coordinates first, then right.
ContextPtr ambient_context(const GroupSpec& g);

/// Generators sigma_j of the Weyl-invariant polynomials in y1..yN of the
/// given ring (which must have at least N variables; the first N are used).
std::vector<Polynomial> weyl_generators(const GroupSpec& g, const ContextPtr& ring,
                                        std::size_t offset = 0);
std::vector<Polynomial> weyl_generators(const GroupSpec& g);

struct GradedAlgebraPresentation {
  GroupSpec group;
  TorusSpec torus;
  ContextPtr context;
  std::vector<Polynomial> relations;
  unsigned m = 0;

  /// Sum of relation degrees minus sum of variable degrees; equals 2m for a
  /// complete intersection with the expected socle.
  long socle_degree() const;
};

/// Pullbacks i*(sigma_j(y_left) - sigma_j(y_right)) in x1..xr.
std::vector<Polynomial> relations(const GroupSpec& g, const TorusSpec& t);

GradedAlgebraPresentation cohomology_presentation(const GroupSpec& g, const TorusSpec& t);

/// Every classified (group, torus) pair with rank(G) in [min_rank, max_rank].
std::vector<std::pair<GroupSpec, TorusSpec>> classified_cases(unsigned min_rank, unsigned max_rank);

}  // namespace biq
