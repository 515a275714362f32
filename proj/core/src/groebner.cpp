#include "biq/groebner.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <queue>
#include <unordered_map>

namespace biq {

ResourceBudget ResourceBudget::unlimited() {
  return {std::numeric_limits<std::size_t>::max(), std::numeric_limits<std::size_t>::max()};
}

bool GroebnerBasis::is_unit_ideal() const {
  return leads_.size() == 1 && leads_.front().is_one();
}

namespace {

struct RationalField {
  using Elem = Rational;
  using TermType = Term;

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  Elem one() const { return 1; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return 1 / a; }
  void add_assign(Elem& a, const Elem& b) const { a += b; }
  void mul_assign(Elem& a, const Elem& b) const { a *= b; }
  /// acc += f * c
  void fma(Elem& acc, const Elem& f, const Elem& c) {
    mpq_mul(scratch.get_mpq_t(), f.get_mpq_t(), c.get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), scratch.get_mpq_t());
  }
  std::size_t bits(const Elem& q) const {
    return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
  }

  Rational scratch;
};

struct PrimeField {
  using Elem = ModularBasis::Coeff;
  using TermType = ModularBasis::ModTerm;

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem one() const { return 1; }
  Elem neg(Elem a) const { return a == 0 ? 0 : static_cast<Elem>(p - a); }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>(std::uint64_t{a} * b % p); }
  Elem inv(Elem a) const {
    std::uint64_t result = 1;
    std::uint64_t base = a;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return static_cast<Elem>(result);
  }
  void add_assign(Elem& a, Elem b) const { a = static_cast<Elem>((std::uint64_t{a} + b) % p); }
  void mul_assign(Elem& a, Elem b) const { a = mul(a, b); }
  void fma(Elem& acc, Elem f, Elem c) const {
    acc = static_cast<Elem>((std::uint64_t{acc} + std::uint64_t{f} * c) % p);
  }
  std::size_t bits(Elem) const { return 0; }

  std::uint64_t p;
};

template <class TermT>
std::vector<TermT> sorted_by(std::vector<TermT> terms, const MonomialOrder& order) {
  if (order.kind != OrderKind::kDegRevLex) {
    std::sort(terms.begin(), terms.end(),
              [&](const TermT& a, const TermT& b) { return order.greater(a.monomial, b.monomial); });
  }
  return terms;
}

/// Sparse accumulator for polynomial reduction: a hash map of coefficients
/// plus a max-heap of the monomials present, so the current leading term is
/// always available without re-sorting.
template <class Field>
class Accumulator {
 public:
  using Elem = typename Field::Elem;
  using TermT = typename Field::TermType;

  Accumulator(const MonomialOrder& order, Field& field) : field_(field), heap_(Ascending{order}) {}

  void add(const Monomial& m, const Elem& c) {
    auto [it, inserted] = coeffs_.try_emplace(m);
    if (inserted) heap_.push(m);
    field_.add_assign(it->second, c);
  }

  /// acc += factor * shift * terms[first..]
  void add_scaled(const std::vector<TermT>& terms, std::size_t first, const Monomial& shift,
                  const Elem& factor) {
    for (std::size_t i = first; i < terms.size(); ++i) {
      auto [it, inserted] = coeffs_.try_emplace(shift * terms[i].monomial);
      if (inserted) heap_.push(it->first);
      field_.fma(it->second, factor, terms[i].coeff);
    }
  }

  /// Removes the largest monomial with nonzero coefficient.
  bool pop_max(Monomial& m, Elem& c) {
    while (!heap_.empty()) {
      m = heap_.top();
      heap_.pop();
      auto it = coeffs_.find(m);
      if (it == coeffs_.end()) continue;
      const bool nonzero = !field_.is_zero(it->second);
      if (nonzero) c = std::move(it->second);
      coeffs_.erase(it);
      if (nonzero) return true;
    }
    return false;
  }

 private:
  struct Ascending {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.greater(b, a); }
  };

  Field& field_;
  std::unordered_map<Monomial, Elem, MonomialHash> coeffs_;
  std::priority_queue<Monomial, std::vector<Monomial>, Ascending> heap_;
};

template <class Field>
struct Element {
  Monomial lead;
  std::uint32_t mask = 0;
  std::vector<typename Field::TermType> terms;  // descending in the basis order, monic
};

template <class Field>
const Element<Field>* find_reducer(const Monomial& m, const std::vector<Element<Field>>& elements,
                                   const std::vector<std::size_t>& active) {
  const auto mask = m.support_mask();
  for (auto idx : active) {
    const auto& e = elements[idx];
    if ((e.mask & ~mask) == 0 && e.lead.divides(m)) return &e;
  }
  return nullptr;
}

/// Fully reduces the accumulator contents against the active elements;
/// returns the remainder, descending, made monic.
template <class Field>
std::vector<typename Field::TermType> reduce_to_remainder(Accumulator<Field>& acc, Field& field,
                                                          const std::vector<Element<Field>>& elements,
                                                          const std::vector<std::size_t>& active) {
  std::vector<typename Field::TermType> rem;
  Monomial m;
  typename Field::Elem c{};
  while (acc.pop_max(m, c)) {
    if (const auto* reducer = find_reducer(m, elements, active)) {
      acc.add_scaled(reducer->terms, 1, reducer->lead.quotient_of(m), field.neg(c));
    } else {
      rem.push_back({m, c});
    }
  }
  if (!rem.empty() && !field.is_one(rem.front().coeff)) {
    const auto inv = field.inv(rem.front().coeff);
    for (auto& t : rem) field.mul_assign(t.coeff, inv);
  }
  return rem;
}

template <class Field>
struct EngineResult {
  /// Sorted ascending by leading monomial.
  std::vector<std::vector<typename Field::TermType>> terms;
  bool truncated = false;
  GroebnerStats stats;
};

/// One Buchberger run. Input generators enter the pair queue with their own
/// degree so that homogeneous input is processed degree by degree.
template <class Field>
class BuchbergerEngine {
 public:
  using TermT = typename Field::TermType;

  BuchbergerEngine(ContextPtr ctx, const BuchbergerOptions& options, Field field)
      : ctx_(std::move(ctx)), options_(options), field_(std::move(field)) {}

  void seed_groebner(const std::vector<std::vector<TermT>>& basis) {
    for (const auto& terms : basis) {
      Element<Field> e;
      e.lead = terms.front().monomial;
      e.mask = e.lead.support_mask();
      e.terms = terms;
      active_.push_back(elements_.size());
      elements_.push_back(std::move(e));
    }
  }

  void add_generator(std::vector<TermT> terms, unsigned degree) {
    if (terms.empty()) return;
    Pair p;
    p.i = inputs_.size();
    p.j = kGenerator;
    p.degree = degree;
    p.seq = next_seq_++;
    inputs_.push_back(sorted_by(std::move(terms), options_.order));
    pairs_.push_back(p);
  }

  EngineResult<Field> run(bool reduce_tails) {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const Pair& a, const Pair& b) {
        return a.degree != b.degree ? a.degree < b.degree : a.seq < b.seq;
      });
      if (options_.degree_bound && best->degree > *options_.degree_bound) {
        truncated_ = true;
        break;
      }
      Pair p = *best;
      pairs_.erase(best);
      ++stats_.pairs_considered;

      Accumulator<Field> acc(options_.order, field_);
      if (p.j == kGenerator) {
        for (const auto& t : inputs_[p.i]) acc.add(t.monomial, t.coeff);
      } else {
        const auto& f = elements_[p.i];
        const auto& g = elements_[p.j];
        acc.add_scaled(f.terms, 1, f.lead.quotient_of(p.lcm), field_.one());
        acc.add_scaled(g.terms, 1, g.lead.quotient_of(p.lcm), field_.neg(field_.one()));
      }
      ++stats_.pairs_reduced;
      auto rem = reduce_to_remainder(acc, field_, elements_, active_);
      if (rem.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(std::move(rem));
    }
    return finish(reduce_tails);
  }

 private:
  static constexpr std::size_t kGenerator = std::numeric_limits<std::size_t>::max();

  struct Pair {
    std::size_t i = 0;
    std::size_t j = 0;
    Monomial lcm;
    unsigned degree = 0;
    std::size_t seq = 0;
  };

  void check_budget(const std::vector<TermT>& terms) const {
    if (elements_.size() + 1 > options_.budget.max_basis_size) {
      throw LimitError("Groebner basis size exceeded the budget of " +
                       std::to_string(options_.budget.max_basis_size) + " elements");
    }
    for (const auto& t : terms) {
      if (field_.bits(t.coeff) > options_.budget.max_coefficient_bits) {
        throw LimitError("coefficient size exceeded the budget of " +
                         std::to_string(options_.budget.max_coefficient_bits) + " bits");
      }
    }
  }

  // Gebauer-Moeller installation of a new element h.
  void insert(std::vector<TermT> terms) {
    check_budget(terms);
    const std::size_t h = elements_.size();
    Element<Field> e;
    e.lead = terms.front().monomial;
    e.mask = e.lead.support_mask();
    e.terms = std::move(terms);
    elements_.push_back(std::move(e));
    ++stats_.elements_added;
    const Monomial& lh = elements_[h].lead;

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(active_.size());
    for (auto g : active_) {
      const auto& lg = elements_[g].lead;
      candidates.push_back({g, Monomial::lcm(lh, lg, *ctx_), Monomial::coprime(lh, lg)});
    }

    // Chain criterion among the new pairs: drop (h,g1) when some other new
    // pair has an lcm properly dividing it (or an equal lcm seen earlier).
    std::vector<char> keep(candidates.size(), 1);
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (candidates[a].coprime) continue;
      for (std::size_t b = 0; b < candidates.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (!candidates[b].lcm.divides(candidates[a].lcm)) continue;
        if (!(candidates[b].lcm == candidates[a].lcm) || b < a) {
          keep[a] = 0;
          break;
        }
      }
    }
    // Among pairs sharing an lcm, a coprime one makes all of them redundant.
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!keep[a] || !candidates[a].coprime) continue;
      for (std::size_t b = 0; b < candidates.size(); ++b) {
        if (b != a && candidates[b].lcm == candidates[a].lcm) keep[b] = 0;
      }
    }

    // Old pairs made redundant by h.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (p.j == kGenerator) return false;
      if (!lh.divides(p.lcm)) return false;
      const auto l1 = Monomial::lcm(elements_[p.i].lead, lh, *ctx_);
      const auto l2 = Monomial::lcm(elements_[p.j].lead, lh, *ctx_);
      return !(l1 == p.lcm) && !(l2 == p.lcm);
    });

    for (std::size_t a = 0; a < candidates.size(); ++a) {
      if (!keep[a] || candidates[a].coprime) continue;
      Pair p;
      p.i = candidates[a].g;
      p.j = h;
      p.lcm = candidates[a].lcm;
      p.degree = p.lcm.degree();
      p.seq = next_seq_++;
      pairs_.push_back(p);
    }

    std::erase_if(active_, [&](std::size_t g) { return lh.divides(elements_[g].lead); });
    active_.push_back(h);
  }

  EngineResult<Field> finish(bool reduce_tails) {
    EngineResult<Field> out;
    out.stats = stats_;
    out.truncated = truncated_;
    out.terms.reserve(active_.size());
    for (auto idx : active_) {
      const auto& e = elements_[idx];
      if (!reduce_tails) {
        out.terms.push_back(e.terms);
        continue;
      }
      Accumulator<Field> acc(options_.order, field_);
      acc.add_scaled(e.terms, 1, Monomial{}, field_.one());
      std::vector<TermT> terms;
      terms.push_back({e.lead, field_.one()});
      Monomial m;
      typename Field::Elem c{};
      while (acc.pop_max(m, c)) {
        if (const auto* reducer = find_reducer(m, elements_, active_)) {
          acc.add_scaled(reducer->terms, 1, reducer->lead.quotient_of(m), field_.neg(c));
        } else {
          terms.push_back({m, c});
        }
      }
      out.terms.push_back(std::move(terms));
    }
    std::sort(out.terms.begin(), out.terms.end(), [&](const auto& a, const auto& b) {
      return options_.order.greater(b.front().monomial, a.front().monomial);
    });
    return out;
  }

  ContextPtr ctx_;
  BuchbergerOptions options_;
  Field field_;
  std::vector<Element<Field>> elements_;
  std::vector<std::size_t> active_;
  std::vector<std::vector<TermT>> inputs_;
  std::vector<Pair> pairs_;
  std::size_t next_seq_ = 0;
  bool truncated_ = false;
  GroebnerStats stats_;
};

void check_generator(const Polynomial& g, const VariableContext& ctx, const BuchbergerOptions& options) {
  if (!same_context(*g.context(), ctx)) throw UsageError("generators belong to different rings");
  if (options.degree_bound && !g.is_zero() && !g.is_homogeneous()) {
    throw UsageError("a degree bound requires homogeneous generators");
  }
}

std::vector<ModularBasis::ModTerm> reduce_mod(const Polynomial& poly, const PrimeField& field) {
  std::vector<ModularBasis::ModTerm> out;
  out.reserve(poly.size());
  for (const auto& t : poly.terms()) {
    const auto den = mpz_fdiv_ui(t.coeff.get_den_mpz_t(), field.p);
    if (den == 0) {
      throw UsageError("coefficient " + to_string(t.coeff) + " is not integral at p = " +
                       std::to_string(field.p));
    }
    const auto num = static_cast<ModularBasis::Coeff>(mpz_fdiv_ui(t.coeff.get_num_mpz_t(), field.p));
    const auto c = field.mul(num, field.inv(static_cast<ModularBasis::Coeff>(den)));
    if (c != 0) out.push_back({t.monomial, c});
  }
  return out;
}

}  // namespace

struct GroebnerBuilder {
  static GroebnerBasis rational(ContextPtr ctx, const BuchbergerOptions& options,
                                EngineResult<RationalField> result) {
    GroebnerBasis gb(std::move(ctx), options.order);
    gb.stats_ = result.stats;
    if (result.truncated) gb.degree_bound_ = options.degree_bound;
    for (auto& terms : result.terms) {
      gb.leads_.push_back(terms.front().monomial);
      gb.generators_.push_back(Polynomial::from_terms(gb.ctx_, terms));
      gb.ordered_.push_back(std::move(terms));
    }
    gb.reduced_ = true;
    return gb;
  }

  static ModularBasis modular(ContextPtr ctx, const BuchbergerOptions& options, std::uint32_t prime,
                              EngineResult<PrimeField> result) {
    ModularBasis gb(std::move(ctx), options.order, prime);
    gb.stats_ = result.stats;
    if (result.truncated) gb.degree_bound_ = options.degree_bound;
    for (auto& terms : result.terms) {
      gb.leads_.push_back(terms.front().monomial);
      gb.ordered_.push_back(std::move(terms));
    }
    return gb;
  }
};

GroebnerBasis buchberger(std::span<const Polynomial> gens, const ContextPtr& ctx,
                         const BuchbergerOptions& options) {
  BuchbergerEngine<RationalField> engine(ctx, options, RationalField{});
  for (const auto& g : gens) {
    check_generator(g, *ctx, options);
    engine.add_generator(g.terms(), g.degree());
  }
  return GroebnerBuilder::rational(ctx, options, engine.run(true));
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const BuchbergerOptions& options) {
  if (gens.empty()) throw UsageError("buchberger: cannot infer the ring from an empty generator list");
  return buchberger(gens, gens.front().context(), options);
}

namespace {

void check_extend(const MonomialOrder& seed_order, std::optional<unsigned> seed_bound,
                  const BuchbergerOptions& options) {
  if (!(seed_order == options.order)) throw UsageError("extend: monomial order mismatch");
  if (seed_bound && (!options.degree_bound || *options.degree_bound > *seed_bound)) {
    throw UsageError("extend: the seed basis is truncated below the requested degree");
  }
}

}  // namespace

GroebnerBasis extend(const GroebnerBasis& basis, std::span<const Polynomial> extra,
                     const BuchbergerOptions& options) {
  check_extend(basis.order(), basis.degree_bound(), options);
  BuchbergerEngine<RationalField> engine(basis.context(), options, RationalField{});
  engine.seed_groebner(basis.ordered_terms());
  for (const auto& g : extra) {
    check_generator(g, *basis.context(), options);
    engine.add_generator(g.terms(), g.degree());
  }
  return GroebnerBuilder::rational(basis.context(), options, engine.run(true));
}

std::span<const std::uint32_t> certificate_primes() {
  static constexpr std::array<std::uint32_t, 4> kPrimes{2147483647u, 2147483629u, 2147483587u,
                                                        2147483579u};
  return kPrimes;
}

bool is_p_integral(const Polynomial& p, std::uint32_t prime) {
  return std::all_of(p.terms().begin(), p.terms().end(), [&](const Term& t) {
    return mpz_fdiv_ui(t.coeff.get_den_mpz_t(), prime) != 0;
  });
}

ModularBasis modular_buchberger(std::span<const Polynomial> gens, const ContextPtr& ctx,
                                std::uint32_t prime, const BuchbergerOptions& options) {
  if (prime < 3) throw UsageError("modular_buchberger: need an odd prime");
  const PrimeField field{prime};
  BuchbergerEngine<PrimeField> engine(ctx, options, field);
  for (const auto& g : gens) {
    check_generator(g, *ctx, options);
    engine.add_generator(reduce_mod(g, field), g.degree());
  }
  return GroebnerBuilder::modular(ctx, options, prime, engine.run(false));
}

ModularBasis modular_extend(const ModularBasis& basis, std::span<const Polynomial> extra,
                            const BuchbergerOptions& options) {
  check_extend(basis.order(), basis.degree_bound(), options);
  const PrimeField field{basis.prime()};
  BuchbergerEngine<PrimeField> engine(basis.context(), options, field);
  engine.seed_groebner(basis.ordered_terms());
  for (const auto& g : extra) {
    check_generator(g, *basis.context(), options);
    engine.add_generator(reduce_mod(g, field), g.degree());
  }
  return GroebnerBuilder::modular(basis.context(), options, basis.prime(), engine.run(false));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!same_context(*p.context(), *gb.context())) throw UsageError("normal_form: ring mismatch");
  RationalField field;
  Accumulator<RationalField> acc(gb.order(), field);
  for (const auto& t : p.terms()) acc.add(t.monomial, t.coeff);
  std::vector<Term> rem;
  Monomial m;
  Rational c;
  const auto& leads = gb.leading_monomials();
  const auto& terms = gb.ordered_terms();
  while (acc.pop_max(m, c)) {
    std::size_t found = leads.size();
    for (std::size_t i = 0; i < leads.size(); ++i) {
      if (leads[i].divides(m)) {
        found = i;
        break;
      }
    }
    if (found < leads.size()) {
      acc.add_scaled(terms[found], 1, leads[found].quotient_of(m), -c);
    } else {
      rem.push_back({m, c});
    }
  }
  return Polynomial::from_terms(p.context(), std::move(rem));
}

bool ideal_contains(const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(p, gb).is_zero();
}

namespace {

/// Enumerates monomials of weighted degree d; `prune` is consulted on
/// partial exponent vectors and stops descent when it returns true.
void enumerate_degree(const VariableContext& ctx, unsigned d,
                      const std::function<bool(const Monomial&)>& prune,
                      const std::function<void(const Monomial&)>& emit) {
  const std::size_t n = ctx.size();
  std::vector<unsigned> exps(n, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned remaining) {
    if (i + 1 == n || n == 0) {
      if (n == 0) {
        if (remaining == 0) emit(Monomial{});
        return;
      }
      if (remaining % ctx.degree(i) != 0) return;
      exps[i] = remaining / ctx.degree(i);
      auto m = Monomial::from_exponents(exps, ctx);
      if (!prune(m)) emit(m);
      exps[i] = 0;
      return;
    }
    for (unsigned e = 0; e * ctx.degree(i) <= remaining; ++e) {
      exps[i] = e;
      if (e > 0 && prune(Monomial::from_exponents(exps, ctx))) break;
      rec(i + 1, remaining - e * ctx.degree(i));
    }
    exps[i] = 0;
  };
  rec(0, d);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const VariableContext& ctx, unsigned d) {
  std::vector<Monomial> out;
  enumerate_degree(ctx, d, [](const Monomial&) { return false; },
                   [&](const Monomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return degrevlex_greater(b, a); });
  return out;
}

std::vector<Monomial> standard_monomials(const VariableContext& ctx, std::span<const Monomial> leads,
                                         const MonomialOrder& order, unsigned d) {
  const auto divisible = [&](const Monomial& m) {
    return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  std::vector<Monomial> out;
  enumerate_degree(ctx, d, divisible, [&](const Monomial& m) { out.push_back(m); });
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return order.greater(b, a); });
  return out;
}

namespace {

void check_bound(std::optional<unsigned> bound, unsigned d) {
  if (bound && d > *bound) {
    throw UsageError("graded_quotient_basis: degree " + std::to_string(d) +
                     " lies above the truncation bound " + std::to_string(*bound));
  }
}

}  // namespace

std::vector<Monomial> graded_quotient_basis(const GroebnerBasis& gb, unsigned d) {
  check_bound(gb.degree_bound(), d);
  return standard_monomials(*gb.context(), gb.leading_monomials(), gb.order(), d);
}

std::vector<Monomial> graded_quotient_basis(const ModularBasis& gb, unsigned d) {
  check_bound(gb.degree_bound(), d);
  return standard_monomials(*gb.context(), gb.leading_monomials(), gb.order(), d);
}

std::size_t graded_quotient_dim(const GroebnerBasis& gb, unsigned d) {
  return graded_quotient_basis(gb, d).size();
}

bool is_artinian(const GroebnerBasis& gb) {
  if (gb.is_unit_ideal()) return true;
  const auto& ctx = *gb.context();
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    const auto pure = std::any_of(gb.leading_monomials().begin(), gb.leading_monomials().end(),
                                  [&](const Monomial& l) {
                                    return l[i] > 0 && l.degree() == l[i] * ctx.degree(i);
                                  });
    if (!pure) return false;
  }
  return true;
}

std::size_t quotient_dimension(const GroebnerBasis& gb) {
  if (!is_artinian(gb)) throw UsageError("quotient_dimension: the quotient is not Artinian");
  if (gb.is_unit_ideal()) return 0;
  const auto& ctx = *gb.context();
  unsigned top = 0;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    unsigned bound = std::numeric_limits<unsigned>::max();
    for (const auto& l : gb.leading_monomials()) {
      if (l[i] > 0 && l.degree() == l[i] * ctx.degree(i)) bound = std::min(bound, l[i]);
    }
    top += (bound - 1) * ctx.degree(i);
  }
  std::size_t total = 0;
  for (unsigned d = 0; d <= top; ++d) total += graded_quotient_dim(gb, d);
  return total;
}

}  // namespace biq
