#include "oracles.hpp"

#include <map>
#include <numeric>

#include "biq/groebner.hpp"

namespace biq::oracle {

Polynomial elementary_symmetric_subsets(unsigned i, const std::vector<Polynomial>& args) {
  const auto& ctx = args.front().context();
  Polynomial sum(ctx);
  const std::size_t n = args.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != i) continue;
    auto prod = Polynomial::constant(ctx, 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (1u << j)) prod = prod * args[j];
    }
    sum += prod;
  }
  return sum;
}

std::size_t bareiss_rank(std::vector<std::vector<Integer>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

namespace {

// Row of integer coordinates in the monomial basis `index`, scaled by the
// lcm of the denominators.
std::vector<Integer> integer_row(const Polynomial& p, const std::map<std::vector<unsigned>, std::size_t>& index,
                                 std::size_t n) {
  Integer l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  std::vector<Integer> row(index.size(), 0);
  for (const auto& t : p.terms()) {
    std::vector<unsigned> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = t.monomial[i];
    const Rational scaled = t.coeff * l;
    row[index.at(e)] = scaled.get_num();
  }
  return row;
}

// All exponent vectors of weighted degree d.
void exponents_of_degree(const VariableContext& ctx, unsigned d, std::size_t i, std::vector<unsigned>& cur,
                         std::vector<std::vector<unsigned>>& out) {
  if (i == ctx.size()) {
    if (d == 0) out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e * ctx.degree(i) <= d; ++e) {
    cur[i] = e;
    exponents_of_degree(ctx, d - e * ctx.degree(i), i + 1, cur, out);
  }
  cur[i] = 0;
}

std::vector<std::vector<unsigned>> exponents_of_degree(const VariableContext& ctx, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(ctx.size(), 0);
  exponents_of_degree(ctx, d, 0, cur, out);
  return out;
}

std::vector<Polynomial> macaulay_rows(const std::vector<Polynomial>& gens, const ContextPtr& ctx, unsigned d) {
  std::vector<Polynomial> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& e : exponents_of_degree(*ctx, d - g.degree())) {
      rows.push_back(Polynomial::monomial(ctx, Monomial::from_exponents(e, *ctx)) * g);
    }
  }
  return rows;
}

std::map<std::vector<unsigned>, std::size_t> monomial_index(const ContextPtr& ctx, unsigned d) {
  std::map<std::vector<unsigned>, std::size_t> index;
  for (const auto& e : exponents_of_degree(*ctx, d)) index.emplace(e, index.size());
  return index;
}

}  // namespace

std::size_t macaulay_quotient_dim(const std::vector<Polynomial>& gens, const ContextPtr& ctx, unsigned d) {
  const auto index = monomial_index(ctx, d);
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : macaulay_rows(gens, ctx, d)) rows.push_back(integer_row(r, index, ctx->size()));
  return index.size() - bareiss_rank(std::move(rows));
}

bool linear_membership(const Polynomial& p, const std::vector<Polynomial>& gens) {
  if (p.is_zero()) return true;
  const auto& ctx = p.context();
  const unsigned d = p.degree();
  const auto index = monomial_index(ctx, d);
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : macaulay_rows(gens, ctx, d)) rows.push_back(integer_row(r, index, ctx->size()));
  const auto base = bareiss_rank(rows);
  rows.push_back(integer_row(p, index, ctx->size()));
  return bareiss_rank(std::move(rows)) == base;
}

std::vector<long long> complete_intersection_hilbert(const std::vector<unsigned>& relation_degrees,
                                                     const std::vector<unsigned>& variable_degrees,
                                                     unsigned max_degree) {
  std::vector<long long> series(max_degree + 1, 0);
  series[0] = 1;
  for (auto a : relation_degrees) {
    for (unsigned d = max_degree; d >= a; --d) {
      series[d] -= series[d - a];
      if (d == a) break;
    }
  }
  for (auto b : variable_degrees) {
    for (unsigned d = b; d <= max_degree; ++d) series[d] += series[d - b];
  }
  return series;
}

moment::PointKind brute_force_cone(const moment::WeightSet& ws, long bound) {
  const auto& w = ws.weights();
  bool spans = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i][0] * w[j][1] - w[i][1] * w[j][0] != 0) spans = true;
    }
  }
  if (!spans) return moment::PointKind::kVertex;
  std::vector<long> coeff(w.size(), 1);
  while (true) {
    long x = 0;
    long y = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      x += coeff[i] * w[i][0];
      y += coeff[i] * w[i][1];
    }
    if (x == 0 && y == 0) return moment::PointKind::kInterior;
    std::size_t pos = 0;
    while (pos < coeff.size() && coeff[pos] == bound) coeff[pos++] = 1;
    if (pos == coeff.size()) return moment::PointKind::kVertex;
    ++coeff[pos];
  }
}

Rational random_rational(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Polynomial random_homogeneous(const ContextPtr& ctx, unsigned d, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution keep(density);
  std::vector<Term> terms;
  for (const auto& e : exponents_of_degree(*ctx, d)) {
    if (keep(rng)) terms.push_back({Monomial::from_exponents(e, *ctx), random_rational(rng)});
  }
  return Polynomial::from_terms(ctx, std::move(terms));
}

Polynomial random_polynomial(const ContextPtr& ctx, unsigned max_degree, std::mt19937_64& rng) {
  Polynomial p(ctx);
  for (unsigned d = 0; d <= max_degree; d += 2) p += random_homogeneous(ctx, d, rng, 0.4);
  return p;
}

}  // namespace biq::oracle
