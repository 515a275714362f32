#include "biq/lefschetz.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace biq {

OmegaCandidate::OmegaCandidate(Polynomial poly) : poly_(std::move(poly)) {
  if (!poly_.is_homogeneous(2)) {
    throw UsageError("a Lefschetz candidate must be homogeneous of degree 2, got " + poly_.to_string());
  }
}

OmegaCandidate default_omega(const GradedAlgebraPresentation& pres) {
  std::vector<Rational> coeffs;
  for (std::size_t i = 1; i <= pres.context->size(); ++i) coeffs.emplace_back(static_cast<long>(i));
  return omega_from_coefficients(pres, coeffs);
}

OmegaCandidate omega_from_coefficients(const GradedAlgebraPresentation& pres,
                                       std::span<const Rational> coeffs) {
  const auto& ctx = pres.context;
  if (coeffs.size() != ctx->size()) {
    throw UsageError("omega needs " + std::to_string(ctx->size()) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  }
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    terms.push_back({Monomial::variable(i, *ctx), coeffs[i]});
  }
  return OmegaCandidate(Polynomial::from_terms(ctx, std::move(terms)));
}

CohomologyRing::CohomologyRing(GradedAlgebraPresentation pres, const MonomialOrder& order,
                               const ResourceBudget& budget)
    : pres_(std::move(pres)), gb_(buchberger(pres_.relations, pres_.context, {order, budget, {}})) {
  if (!is_artinian(gb_)) {
    throw UsageError("the quotient by the relations is not Artinian");
  }
}

namespace {

// No monomial has a degree that is not a multiple of the gcd of the
// variable degrees; with every generator in degree 2 these are the odd degrees.
bool degree_is_empty(const VariableContext& ctx, unsigned d) {
  unsigned g = 0;
  for (auto deg : ctx.degrees()) g = std::gcd(g, deg);
  return g != 0 && d % g != 0;
}

void require_ring(const CohomologyRing& ring, const OmegaCandidate& w) {
  if (!same_context(*ring.context(), *w.poly().context())) {
    throw UsageError("the Lefschetz candidate lives in a different ring");
  }
}

}  // namespace

namespace {

/// Seed for the modular certificate: a Groebner basis mod p of the relations
/// ideal, for the first certificate prime at which the data is p-integral.
std::optional<ModularBasis> modular_seed(const CohomologyRing& ring, const OmegaCandidate& w,
                                         const HlpOptions& options) {
  const auto& gens = ring.basis().generators();
  for (auto prime : certificate_primes()) {
    const bool integral = is_p_integral(w.poly(), prime) &&
                          std::all_of(gens.begin(), gens.end(),
                                      [&](const Polynomial& g) { return is_p_integral(g, prime); });
    if (integral) return modular_buchberger(gens, ring.context(), prime, {options.order, options.budget, {}});
  }
  return std::nullopt;
}

}  // namespace

HlpVerdict is_hard_lefschetz(const CohomologyRing& ring, const OmegaCandidate& w,
                             const HlpOptions& options) {
  require_ring(ring, w);
  const unsigned m = ring.m();
  const auto& ctx = *ring.context();
  const auto& p = w.poly();
  HlpVerdict verdict;

  std::optional<ModularBasis> seed;
  Polynomial reduced = Polynomial::constant(ring.context(), 1);
  for (unsigned k = 1; k <= m; ++k) {
    const unsigned target = m + k;
    try {
      if (options.reduced_power) reduced = normal_form(p * reduced, ring.basis());
      if (degree_is_empty(ctx, target)) continue;

      const Polynomial power = options.reduced_power ? reduced : pow(p, k);
      BuchbergerOptions opts{options.order, options.budget, target};
      const Polynomial extra[] = {power};
      if (options.modular_certificate) {
        if (!seed) seed = modular_seed(ring, w, options);
        if (seed && is_p_integral(power, seed->prime()) &&
            graded_quotient_basis(modular_extend(*seed, extra, opts), target).empty()) {
          continue;
        }
      }
      auto gb = extend(ring.basis(), extra, opts);
      auto cokernel = graded_quotient_basis(gb, target);
      if (!cokernel.empty()) {
        verdict.passes = false;
        verdict.failing_k = k;
        verdict.witness = std::move(cokernel);
        return verdict;
      }
    } catch (const HlpLimitError&) {
      throw;
    } catch (const LimitError& e) {
      throw HlpLimitError(std::string(e.what()) + " (at k = " + std::to_string(k) + ")", k);
    }
  }
  return verdict;
}

HlpVerdict is_hard_lefschetz(const GradedAlgebraPresentation& pres, const OmegaCandidate& w,
                             const HlpOptions& options) {
  CohomologyRing ring(pres, options.order, options.budget);
  return is_hard_lefschetz(ring, w, options);
}

std::size_t rational_rank(std::vector<Rational> a, std::size_t rows, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    const Rational inv = 1 / a[rank * cols + c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r * cols + c] == 0) continue;
      const Rational f = a[r * cols + c] * inv;
      for (std::size_t j = c; j < cols; ++j) {
        if (a[rank * cols + j] != 0) a[r * cols + j] -= f * a[rank * cols + j];
      }
    }
    ++rank;
  }
  return rank;
}

bool surjectivity_rank_oracle(const CohomologyRing& ring, const OmegaCandidate& w, unsigned k) {
  require_ring(ring, w);
  const unsigned m = ring.m();
  if (k < 1 || k > m) throw UsageError("surjectivity_rank_oracle: k must lie in 1..m");
  const auto& gb = ring.basis();
  const auto source = graded_quotient_basis(gb, m - k);
  const auto target = graded_quotient_basis(gb, m + k);
  if (target.empty()) return true;

  std::unordered_map<Monomial, std::size_t, MonomialHash> column_of;
  for (std::size_t i = 0; i < target.size(); ++i) column_of.emplace(target[i], i);

  const Polynomial power = normal_form(pow(w.poly(), k), gb);
  std::vector<Rational> matrix(source.size() * target.size(), 0);
  for (std::size_t r = 0; r < source.size(); ++r) {
    const auto image = normal_form(Polynomial::monomial(ring.context(), source[r]) * power, gb);
    for (const auto& t : image.terms()) {
      matrix[r * target.size() + column_of.at(t.monomial)] = t.coeff;
    }
  }
  return rational_rank(std::move(matrix), source.size(), target.size()) == target.size();
}

bool surjectivity_rank_oracle(const GradedAlgebraPresentation& pres, const OmegaCandidate& w,
                              unsigned k) {
  return surjectivity_rank_oracle(CohomologyRing(pres), w, k);
}

HlpVerdict rank_oracle_verdict(const CohomologyRing& ring, const OmegaCandidate& w) {
  HlpVerdict verdict;
  for (unsigned k = 1; k <= ring.m(); ++k) {
    if (!surjectivity_rank_oracle(ring, w, k)) {
      verdict.passes = false;
      verdict.failing_k = k;
      // Cokernel representatives are not produced by the rank method.
      return verdict;
    }
  }
  return verdict;
}

std::vector<std::size_t> betti_numbers(const CohomologyRing& ring) {
  std::vector<std::size_t> out(2 * ring.m() + 1, 0);
  for (unsigned d = 0; d <= 2 * ring.m(); ++d) {
    out[d] = degree_is_empty(*ring.context(), d) ? 0 : graded_quotient_dim(ring.basis(), d);
  }
  return out;
}

std::vector<std::size_t> betti_numbers(const GradedAlgebraPresentation& pres) {
  return betti_numbers(CohomologyRing(pres));
}

}  // namespace biq
