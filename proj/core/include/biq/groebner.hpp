#pragma once

// Buchberger's algorithm with the Gebauer-Moeller criteria, normal forms,
// ideal membership and standard-monomial bases of graded quotients.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biq/polyring.hpp"

namespace biq {

enum class OrderKind { kDegRevLex, kLex };

/// A multiplicative total order on monomials with x1 > x2 > ... > xn.
struct MonomialOrder {
  OrderKind kind = OrderKind::kDegRevLex;

  static MonomialOrder degrevlex() { return {OrderKind::kDegRevLex}; }
  static MonomialOrder lex() { return {OrderKind::kLex}; }

  bool greater(const Monomial& a, const Monomial& b) const {
    return kind == OrderKind::kLex ? lex_greater(a, b) : degrevlex_greater(a, b);
  }
  std::string name() const { return kind == OrderKind::kLex ? "lex" : "grevlex"; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// Caps on the work Buchberger may do before giving up with a LimitError.
struct ResourceBudget {
  std::size_t max_basis_size = 4000;
  std::size_t max_coefficient_bits = 1u << 16;

  /// Enough for every rank <= 4 biquotient.
  static ResourceBudget standard() { return {}; }
  /// Needed for rank 5.
  static ResourceBudget large() { return {100000, 1u << 22}; }
  static ResourceBudget unlimited();
};

struct BuchbergerOptions {
  MonomialOrder order{};
  ResourceBudget budget{};
  /// For homogeneous input: stop once every remaining S-pair has weighted
  /// degree above this bound. The result then agrees with the true basis in
  /// all degrees up to the bound.
  std::optional<unsigned> degree_bound{};
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t elements_added = 0;
};

class GroebnerBasis {
 public:
  /// Generators are monic with respect to order(), sorted ascending by
  /// leading monomial.
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  /// Generator terms sorted descending in order().
  const std::vector<std::vector<Term>>& ordered_terms() const { return ordered_; }
  const MonomialOrder& order() const { return order_; }
  const ContextPtr& context() const { return ctx_; }
  bool reduced() const { return reduced_; }
  /// Set when the computation stopped at a degree bound.
  std::optional<unsigned> degree_bound() const { return degree_bound_; }
  const GroebnerStats& stats() const { return stats_; }

  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  /// True iff the basis is {1}.
  bool is_unit_ideal() const;

 private:
  friend struct GroebnerBuilder;
  GroebnerBasis(ContextPtr ctx, MonomialOrder order) : ctx_(std::move(ctx)), order_(order) {}

  ContextPtr ctx_;
  MonomialOrder order_;
  std::vector<Polynomial> generators_;
  std::vector<Monomial> leads_;
  std::vector<std::vector<Term>> ordered_;
  bool reduced_ = false;
  std::optional<unsigned> degree_bound_;
  GroebnerStats stats_;
};

/// Reduced Groebner basis of the ideal generated by gens. All gens must share
/// one ring; `ctx` names that ring when gens is empty.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const ContextPtr& ctx,
                         const BuchbergerOptions& options = {});
GroebnerBasis buchberger(std::span<const Polynomial> gens, const BuchbergerOptions& options = {});

/// Reduced Groebner basis of (basis, extra), reusing that the generators of
/// `basis` already form a Groebner basis: only S-pairs involving the new
/// generators are formed.
GroebnerBasis extend(const GroebnerBasis& basis, std::span<const Polynomial> extra,
                     const BuchbergerOptions& options);

/// Remainder of multivariate division by the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

bool ideal_contains(const Polynomial& p, const GroebnerBasis& gb);

/// Monomials of weighted degree d divisible by no leading monomial of gb,
/// in ascending order. For a homogeneous ideal these form a basis of the
/// degree-d part of the quotient.
std::vector<Monomial> graded_quotient_basis(const GroebnerBasis& gb, unsigned d);
std::size_t graded_quotient_dim(const GroebnerBasis& gb, unsigned d);

/// All monomials of weighted degree d in the ring, ascending in degrevlex.
std::vector<Monomial> monomials_of_degree(const VariableContext& ctx, unsigned d);

/// True iff the quotient is finite dimensional, i.e. every variable has a
/// pure power among the leading monomials.
bool is_artinian(const GroebnerBasis& gb);

/// Total dimension of an Artinian quotient (number of standard monomials).
std::size_t quotient_dimension(const GroebnerBasis& gb);

/// Monomials of weighted degree d divisible by none of `leads`, ascending in
/// `order`.
std::vector<Monomial> standard_monomials(const VariableContext& ctx, std::span<const Monomial> leads,
                                         const MonomialOrder& order, unsigned d);

/// Groebner basis over the prime field F_p of the reduction modulo p of an
/// ideal with p-integral rational generators. For a homogeneous ideal I the
/// degree-d part of the quotient mod p is at least as large as that of
/// Q[x]/I, so a vanishing component mod p certifies vanishing over Q.
class ModularBasis {
 public:
  using Coeff = std::uint32_t;
  struct ModTerm {
    Monomial monomial;
    Coeff coeff;
  };

  std::uint32_t prime() const { return prime_; }
  const ContextPtr& context() const { return ctx_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  /// Monic generators, terms descending in order().
  const std::vector<std::vector<ModTerm>>& ordered_terms() const { return ordered_; }
  std::optional<unsigned> degree_bound() const { return degree_bound_; }
  const GroebnerStats& stats() const { return stats_; }
  std::size_t size() const { return leads_.size(); }

 private:
  friend struct GroebnerBuilder;
  ModularBasis(ContextPtr ctx, MonomialOrder order, std::uint32_t prime)
      : prime_(prime), ctx_(std::move(ctx)), order_(order) {}

  std::uint32_t prime_;
  ContextPtr ctx_;
  MonomialOrder order_;
  std::vector<Monomial> leads_;
  std::vector<std::vector<ModTerm>> ordered_;
  std::optional<unsigned> degree_bound_;
  GroebnerStats stats_;
};

/// Primes below 2^31 used for modular certificates, largest first.
std::span<const std::uint32_t> certificate_primes();

/// True iff no coefficient denominator of p is divisible by `prime`.
bool is_p_integral(const Polynomial& p, std::uint32_t prime);

/// Groebner basis mod `prime` of (gens mod prime). Throws UsageError unless
/// every generator is p-integral.
ModularBasis modular_buchberger(std::span<const Polynomial> gens, const ContextPtr& ctx,
                                std::uint32_t prime, const BuchbergerOptions& options = {});
/// Groebner basis mod p of (basis, extra mod p); `basis` must be complete or
/// truncated at or above the requested bound.
ModularBasis modular_extend(const ModularBasis& basis, std::span<const Polynomial> extra,
                            const BuchbergerOptions& options);

std::vector<Monomial> graded_quotient_basis(const ModularBasis& gb, unsigned d);

}  // namespace biq
