#include "biq/biquotient.hpp"

#include <algorithm>
#include <cctype>

namespace biq {

void GroupSpec::validate() const {
  switch (family) {
    case Family::kSU:
      if (n < 3) throw UsageError("SU(n) requires n >= 3");
      break;
    case Family::kSp:
    case Family::kSpinOdd:
      if (n < 2) throw UsageError(family_name(family) + " requires n >= 2");
      break;
    case Family::kSpinEven:
      if (n < 4) throw UsageError("Spin(2n) requires n >= 4");
      break;
  }
  if (2 * n > kMaxVariables) throw UsageError("rank too large for the polynomial kernel");
}

unsigned GroupSpec::dimension() const {
  switch (family) {
    case Family::kSU:
      return n * n - 1;
    case Family::kSp:
    case Family::kSpinOdd:
      return n * (2 * n + 1);
    case Family::kSpinEven:
      return n * (2 * n - 1);
  }
  return 0;
}

unsigned long long GroupSpec::weyl_group_order() const {
  unsigned long long fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact *= i;
  switch (family) {
    case Family::kSU:
      return fact;
    case Family::kSp:
    case Family::kSpinOdd:
      return (1ull << n) * fact;
    case Family::kSpinEven:
      return (1ull << (n - 1)) * fact;
  }
  return 0;
}

std::string GroupSpec::name() const {
  switch (family) {
    case Family::kSU:
      return "SU(" + std::to_string(n) + ")";
    case Family::kSp:
      return "Sp(" + std::to_string(n) + ")";
    case Family::kSpinOdd:
      return "Spin(" + std::to_string(2 * n + 1) + ")";
    case Family::kSpinEven:
      return "Spin(" + std::to_string(2 * n) + ")";
  }
  return {};
}

Family parse_family(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "su") return Family::kSU;
  if (s == "sp") return Family::kSp;
  if (s == "spin-odd" || s == "spinodd" || s == "b") return Family::kSpinOdd;
  if (s == "spin-even" || s == "spineven" || s == "d") return Family::kSpinEven;
  throw UsageError("unknown group family '" + std::string(text) +
                   "' (expected su, sp, spin-odd or spin-even)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kSU:
      return "su";
    case Family::kSp:
      return "sp";
    case Family::kSpinOdd:
      return "spin-odd";
    case Family::kSpinEven:
      return "spin-even";
  }
  return {};
}

void TorusSpec::validate_for(const GroupSpec& g) const {
  g.validate();
  if (kind == TorusKind::kEschenburg) {
    if (g.family != Family::kSU || g.n != 3) {
      throw UsageError("the Eschenburg torus is only defined for SU(3)");
    }
    return;
  }
  if (g.family == Family::kSU && (k < 1 || k > g.n / 2)) {
    throw UsageError("SU(" + std::to_string(g.n) + ") tori need 1 <= k <= " +
                     std::to_string(g.n / 2));
  }
}

std::string TorusSpec::name(const GroupSpec& g) const {
  if (kind == TorusKind::kEschenburg) return "eschenburg";
  const char* j = kind == TorusKind::kFirst ? "1" : "2";
  if (g.family == Family::kSU) return "s" + std::to_string(k) + j;
  return std::string("s") + j;
}

TorusSpec parse_torus(std::string_view text, const GroupSpec& g, std::optional<unsigned> k) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  TorusSpec t;
  if (s == "eschenburg") {
    if (k) throw UsageError("--k does not apply to the Eschenburg torus");
    t.kind = TorusKind::kEschenburg;
  } else if (s == "s1" || s == "s2" || s == "sk1" || s == "sk2") {
    t.kind = s.back() == '1' ? TorusKind::kFirst : TorusKind::kSecond;
    if (k && g.family != Family::kSU) throw UsageError("--k only applies to SU(n) tori");
    t.k = k.value_or(1);
  } else if (g.family == Family::kSU && s.size() >= 3 && s[0] == 's' &&
             std::all_of(s.begin() + 1, s.end(), [](unsigned char c) { return std::isdigit(c); }) &&
             (s.back() == '1' || s.back() == '2')) {
    t.kind = s.back() == '1' ? TorusKind::kFirst : TorusKind::kSecond;
    t.k = static_cast<unsigned>(std::stoul(s.substr(1, s.size() - 2)));
    if (k && *k != t.k) throw UsageError("torus '" + s + "' contradicts --k " + std::to_string(*k));
  } else {
    throw UsageError("unknown torus '" + std::string(text) + "' for " + g.name());
  }
  t.validate_for(g);
  return t;
}

std::vector<Rational> TorusEmbedding::column(std::size_t c) const {
  std::vector<Rational> out(rows);
  for (std::size_t r = 0; r < rows; ++r) out[r] = at(r, c);
  return out;
}

std::size_t TorusEmbedding::rank() const {
  std::vector<Rational> a = entries;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + c] == 0) ++pivot;
    if (pivot == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r * cols + c] == 0) continue;
      Rational f = a[r * cols + c] / a[rank * cols + c];
      for (std::size_t j = c; j < cols; ++j) a[r * cols + j] -= f * a[rank * cols + j];
    }
    ++rank;
  }
  return rank;
}

namespace {

// A generator of s written as (left; right) vectors in the standard basis.
struct PairVector {
  std::vector<Rational> left;
  std::vector<Rational> right;
};

PairVector zero_pair(unsigned n) {
  return {std::vector<Rational>(n, 0), std::vector<Rational>(n, 0)};
}

void remove_trace(std::vector<Rational>& v) {
  Rational trace = 0;
  for (const auto& x : v) trace += x;
  Rational shift = trace / static_cast<long>(v.size());
  for (auto& x : v) x -= shift;
}

std::vector<PairVector> basis_vectors(const GroupSpec& g, const TorusSpec& t) {
  const unsigned n = g.n;
  std::vector<PairVector> basis;
  if (t.kind == TorusKind::kEschenburg) {
    auto a = zero_pair(3);
    a.left = {2, 0, 0};
    a.right = {1, 0, 1};
    auto b = zero_pair(3);
    b.right = {1, -1, 0};
    return {a, b};
  }
  if (g.family == Family::kSU) {
    const unsigned k = t.k;
    if (t.kind == TorusKind::kFirst) {
      // (2e_n; e_1 + e_n)', (0; e_a - e_1) for a <= k, (0; e_b - e_n) for b > k.
      auto head = zero_pair(n);
      head.left[n - 1] = 2;
      head.right[0] += 1;
      head.right[n - 1] += 1;
      basis.push_back(head);
      for (unsigned a = 2; a <= k; ++a) {
        auto v = zero_pair(n);
        v.right[a - 1] += 1;
        v.right[0] -= 1;
        basis.push_back(v);
      }
      for (unsigned b = k + 1; b <= n - 1; ++b) {
        auto v = zero_pair(n);
        v.right[b - 1] += 1;
        v.right[n - 1] -= 1;
        basis.push_back(v);
      }
    } else {
      // (2 sum_{i<=k} e_i; e_n - e_1 + 2 sum_{i<=k} e_i)', (0; e_i - e_1) for 2 <= i <= n-1.
      auto head = zero_pair(n);
      for (unsigned i = 0; i < k; ++i) {
        head.left[i] += 2;
        head.right[i] += 2;
      }
      head.right[n - 1] += 1;
      head.right[0] -= 1;
      basis.push_back(head);
      for (unsigned i = 2; i <= n - 1; ++i) {
        auto v = zero_pair(n);
        v.right[i - 1] += 1;
        v.right[0] -= 1;
        basis.push_back(v);
      }
    }
    for (auto& v : basis) {
      remove_trace(v.left);
      remove_trace(v.right);
    }
    return basis;
  }
  if (t.kind == TorusKind::kFirst) {
    // (e_n; 0), (0; e_i - e_n) for i < n.
    auto head = zero_pair(n);
    head.left[n - 1] = 1;
    basis.push_back(head);
    for (unsigned i = 1; i < n; ++i) {
      auto v = zero_pair(n);
      v.right[i - 1] = 1;
      v.right[n - 1] = -1;
      basis.push_back(v);
    }
  } else {
    // (e; 0), (0; e_i) for i < n.
    auto head = zero_pair(n);
    std::fill(head.left.begin(), head.left.end(), Rational(1));
    basis.push_back(head);
    for (unsigned i = 1; i < n; ++i) {
      auto v = zero_pair(n);
      v.right[i - 1] = 1;
      basis.push_back(v);
    }
  }
  return basis;
}

}  // namespace

TorusEmbedding torus_embedding(const GroupSpec& g, const TorusSpec& t) {
  t.validate_for(g);
  const auto basis = basis_vectors(g, t);
  const unsigned n = g.ambient_coordinates();
  TorusEmbedding emb;
  emb.rows = 2 * n;
  emb.cols = basis.size();
  emb.entries.assign(emb.rows * emb.cols, 0);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    for (unsigned j = 0; j < n; ++j) {
      emb.at(j, c) = basis[c].left[j];
      emb.at(n + j, c) = basis[c].right[j];
    }
  }
  return emb;
}

ContextPtr ambient_context(const GroupSpec& g) {
  return VariableContext::make("y", 2 * g.ambient_coordinates());
}

std::vector<Polynomial> weyl_generators(const GroupSpec& g, const ContextPtr& ring,
                                        std::size_t offset) {
  const unsigned n = g.ambient_coordinates();
  if (ring->size() < offset + n) throw UsageError("weyl_generators: ring too small");
  std::vector<Polynomial> ys, squares;
  for (unsigned j = 0; j < n; ++j) {
    ys.push_back(Polynomial::variable(ring, offset + j));
    squares.push_back(ys.back() * ys.back());
  }
  std::vector<Polynomial> out;
  switch (g.family) {
    case Family::kSU:
      for (unsigned i = 2; i <= n; ++i) out.push_back(elementary_symmetric(i, ys));
      break;
    case Family::kSp:
    case Family::kSpinOdd:
      for (unsigned i = 1; i <= n; ++i) out.push_back(elementary_symmetric(i, squares));
      break;
    case Family::kSpinEven:
      for (unsigned i = 1; i + 1 <= n; ++i) out.push_back(elementary_symmetric(i, squares));
      out.push_back(elementary_symmetric(n, ys));
      break;
  }
  return out;
}

std::vector<Polynomial> weyl_generators(const GroupSpec& g) {
  g.validate();
  return weyl_generators(g, VariableContext::make("y", g.ambient_coordinates()));
}

std::vector<Polynomial> relations(const GroupSpec& g, const TorusSpec& t) {
  const auto emb = torus_embedding(g, t);
  const auto ys = ambient_context(g);
  const auto xs = VariableContext::make("x", emb.cols);
  const auto left = weyl_generators(g, ys, 0);
  const auto right = weyl_generators(g, ys, g.ambient_coordinates());

  std::vector<Polynomial> images;
  images.reserve(emb.rows);
  for (std::size_t j = 0; j < emb.rows; ++j) {
    Polynomial image(xs);
    for (std::size_t c = 0; c < emb.cols; ++c) {
      if (emb.at(j, c) != 0) image += emb.at(j, c) * Polynomial::variable(xs, c);
    }
    images.push_back(std::move(image));
  }

  std::vector<Polynomial> out;
  out.reserve(left.size());
  for (std::size_t i = 0; i < left.size(); ++i) {
    out.push_back(substitute(left[i] - right[i], images));
  }
  return out;
}

long GradedAlgebraPresentation::socle_degree() const {
  long total = 0;
  for (const auto& f : relations) total += static_cast<long>(f.degree());
  for (auto d : context->degrees()) total -= static_cast<long>(d);
  return total;
}

GradedAlgebraPresentation cohomology_presentation(const GroupSpec& g, const TorusSpec& t) {
  GradedAlgebraPresentation pres;
  pres.group = g;
  pres.torus = t;
  pres.relations = relations(g, t);
  pres.context = pres.relations.front().context();
  pres.m = g.half_dimension();
  return pres;
}

std::vector<std::pair<GroupSpec, TorusSpec>> classified_cases(unsigned min_rank, unsigned max_rank) {
  std::vector<std::pair<GroupSpec, TorusSpec>> out;
  for (unsigned n = 3; n - 1 <= max_rank; ++n) {
    if (n - 1 < min_rank) continue;
    for (unsigned k = 1; k <= n / 2; ++k) {
      out.push_back({{Family::kSU, n}, {TorusKind::kFirst, k}});
      out.push_back({{Family::kSU, n}, {TorusKind::kSecond, k}});
    }
  }
  for (Family f : {Family::kSp, Family::kSpinOdd, Family::kSpinEven}) {
    const unsigned lowest = f == Family::kSpinEven ? 4 : 2;
    for (unsigned n = std::max(lowest, min_rank); n <= max_rank; ++n) {
      out.push_back({{f, n}, {TorusKind::kFirst, 1}});
      out.push_back({{f, n}, {TorusKind::kSecond, 1}});
    }
  }
  return out;
}

}  // namespace biq
