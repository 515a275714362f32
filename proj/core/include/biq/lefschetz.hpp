#pragma once

// Hard Lefschetz tests for Artinian graded algebras R/(f1..fN) with socle in
// degree 2m. A class w in degree 2 is Hard Lefschetz iff multiplication by
// w^k maps onto the degree m+k component for every k = 1..m, which is the
// same as the degree m+k part of R/(f1..fN, w^k) vanishing.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "biq/biquotient.hpp"
#include "biq/groebner.hpp"

namespace biq {

/// A homogeneous degree-2 element of the presentation ring (zero allowed).
class OmegaCandidate {
 public:
  explicit OmegaCandidate(Polynomial poly);
  const Polynomial& poly() const { return poly_; }

 private:
  Polynomial poly_;
};

/// sum_i i * x_i over the presentation's variables.
OmegaCandidate default_omega(const GradedAlgebraPresentation& pres);
/// sum_i coeffs[i] * x_i.
OmegaCandidate omega_from_coefficients(const GradedAlgebraPresentation& pres,
                                       std::span<const Rational> coeffs);

struct HlpVerdict {
  bool passes = true;
  std::optional<unsigned> failing_k;
  /// Standard monomials spanning the nonzero degree m+k cokernel on failure.
  std::vector<Monomial> witness;

  friend bool operator==(const HlpVerdict&, const HlpVerdict&) = default;
};

struct HlpOptions {
  MonomialOrder order{};
  ResourceBudget budget{};
  /// Use NF(w * NF(w^(k-1))) instead of the raw power w^k as the extra
  /// generator. Same ideal, smaller input.
  bool reduced_power = false;
  /// Try each k modulo a large prime first. A vanishing component mod p
  /// proves vanishing over Q; anything else is decided over Q.
  bool modular_certificate = true;
};

/// LimitError raised inside the k loop; remembers which k was running.
class HlpLimitError : public LimitError {
 public:
  HlpLimitError(const std::string& what, unsigned k) : LimitError(what), k_(k) {}
  unsigned k_reached() const { return k_; }

 private:
  unsigned k_;
};

/// The relations-only quotient of a presentation together with its reduced
/// Groebner basis. Construction fails with UsageError if the quotient is not
/// Artinian.
class CohomologyRing {
 public:
  explicit CohomologyRing(GradedAlgebraPresentation pres, const MonomialOrder& order = {},
                          const ResourceBudget& budget = {});

  const GradedAlgebraPresentation& presentation() const { return pres_; }
  const GroebnerBasis& basis() const { return gb_; }
  unsigned m() const { return pres_.m; }
  const ContextPtr& context() const { return pres_.context; }

 private:
  GradedAlgebraPresentation pres_;
  GroebnerBasis gb_;
};

HlpVerdict is_hard_lefschetz(const CohomologyRing& ring, const OmegaCandidate& w,
                             const HlpOptions& options = {});
HlpVerdict is_hard_lefschetz(const GradedAlgebraPresentation& pres, const OmegaCandidate& w,
                             const HlpOptions& options = {});

/// Independent check of the k-th surjectivity condition: the rank of the
/// matrix of multiplication by w^k from degree m-k to degree m+k of the
/// quotient equals the dimension of the target.
bool surjectivity_rank_oracle(const CohomologyRing& ring, const OmegaCandidate& w, unsigned k);
bool surjectivity_rank_oracle(const GradedAlgebraPresentation& pres, const OmegaCandidate& w,
                              unsigned k);

/// Verdict assembled from the rank oracle for k = 1..m.
HlpVerdict rank_oracle_verdict(const CohomologyRing& ring, const OmegaCandidate& w);

/// Dimensions of the quotient in degrees 0..2m (odd degrees are 0).
std::vector<std::size_t> betti_numbers(const CohomologyRing& ring);
std::vector<std::size_t> betti_numbers(const GradedAlgebraPresentation& pres);

/// Exact rank over Q of a dense row-major matrix.
std::size_t rational_rank(std::vector<Rational> entries, std::size_t rows, std::size_t cols);

}  // namespace biq
