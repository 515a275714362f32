#pragma once

// Exact multivariate polynomials over the rationals with an even weighted
// grading. Terms are stored sparsely, sorted descending in weighted degree
// reverse lexicographic order (x1 > x2 > ... > xn).

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biq/errors.hpp"

namespace biq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses `a`, `-a` or `a/b`; the result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline constexpr std::size_t kMaxVariables = 16;

/// Names and (positive, even) cohomological degrees of the ring variables.
class VariableContext {
 public:
  VariableContext(std::vector<std::string> names, std::vector<unsigned> degrees);

  /// Variables `prefix1 ... prefixN`, all of the given degree.
  static std::shared_ptr<const VariableContext> make(std::string_view prefix, std::size_t count,
                                                     unsigned degree = 2);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  unsigned degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<unsigned>& degrees() const { return degrees_; }

  /// Index of the variable with this name, or size() if absent.
  std::size_t index_of(std::string_view name) const;

  friend bool operator==(const VariableContext&, const VariableContext&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<unsigned> degrees_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

/// Exponent vector plus its cached weighted degree.
class Monomial {
 public:
  Monomial() = default;

  static Monomial from_exponents(std::span<const unsigned> exponents, const VariableContext& ctx);
  static Monomial variable(std::size_t i, const VariableContext& ctx);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Bit i set iff variable i occurs. Used to reject divisibility quickly.
  std::uint32_t support_mask() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, numerator) to hold, i.e. numerator / *this.
  Monomial quotient_of(const Monomial& numerator) const;
  /// Least common multiple; the weighted degree needs the variable weights.
  static Monomial lcm(const Monomial& a, const Monomial& b, const VariableContext& ctx);
  static bool coprime(const Monomial& a, const Monomial& b);

  std::size_t hash() const;
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Weighted degree reverse lexicographic comparison: true iff a > b.
inline bool degrevlex_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

/// Pure lexicographic comparison with x1 > x2 > ...: true iff a > b.
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a[i] != b[i]) return a[i] > b[i];
  }
  return false;
}

std::string to_string(const Monomial& m, const VariableContext& ctx);

struct Term {
  Monomial monomial;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  /// The zero polynomial of the ring.
  explicit Polynomial(ContextPtr ctx);

  /// Sorts, merges equal monomials, and drops zero coefficients.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms);
  static Polynomial constant(ContextPtr ctx, const Rational& c);
  static Polynomial variable(ContextPtr ctx, std::size_t i);
  static Polynomial monomial(ContextPtr ctx, const Monomial& m, const Rational& c = 1);
  /// Parses the canonical text form, e.g. `3*x1^2*x2 - 1/2*x2^3`.
  static Polynomial parse(ContextPtr ctx, std::string_view text);

  const ContextPtr& context() const { return ctx_; }
  /// Terms in descending degrevlex order.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Highest weighted degree of a term; 0 for the zero polynomial.
  unsigned degree() const;
  /// True iff every term has weighted degree d. The zero polynomial is
  /// homogeneous of every degree.
  bool is_homogeneous(unsigned d) const;
  bool is_homogeneous() const;

  Rational coefficient(const Monomial& m) const;

  std::string to_string() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Rational& c);

  friend bool operator==(const Polynomial& p, const Polynomial& q);

 private:
  Polynomial(ContextPtr ctx, std::vector<Term> sorted_terms);

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

/// Throws UsageError unless the two rings agree.
void require_same_context(const Polynomial& p, const Polynomial& q);
bool same_context(const VariableContext& a, const VariableContext& b);

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial sub(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, unsigned exponent);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }
Polynomial operator*(const Rational& c, const Polynomial& p);

/// The i-th elementary symmetric polynomial evaluated at args, built with
/// e_i(a1..an) = an * e_{i-1}(a1..a(n-1)) + e_i(a1..a(n-1)).
/// e_0 = 1 and e_i = 0 for i > args.size().
Polynomial elementary_symmetric(unsigned i, std::span<const Polynomial> args);

/// Ring homomorphism sending the j-th variable of p's ring to images[j].
/// Each image must be zero or homogeneous of the degree of its variable.
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);

/// Sum of the terms of p of weighted degree exactly d.
Polynomial homogeneous_component(const Polynomial& p, unsigned d);

}  // namespace biq
