#include "biq/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace biq {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw UsageError("empty rational literal");
  const auto valid = [](std::string_view digits) {
    std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
    if (start == digits.size()) return false;
    return std::all_of(digits.begin() + start, digits.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den[0] == '-' || den[0] == '+') {
    throw UsageError("malformed rational literal '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Rational q;
  q.get_num() = Integer(num);
  q.get_den() = Integer(den);
  if (q.get_den() == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------

VariableContext::VariableContext(std::vector<std::string> names, std::vector<unsigned> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size()) {
    throw UsageError("variable names and degrees differ in length");
  }
  if (names_.size() > kMaxVariables) {
    throw UsageError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])) ||
        !std::all_of(n.begin(), n.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; })) {
      throw UsageError("invalid variable name '" + n + "'");
    }
    if (!seen.insert(n).second) throw UsageError("duplicate variable name '" + n + "'");
    if (degrees_[i] < 2 || degrees_[i] % 2 != 0) {
      throw UsageError("variable degrees must be positive and even");
    }
  }
}

std::shared_ptr<const VariableContext> VariableContext::make(std::string_view prefix,
                                                             std::size_t count, unsigned degree) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return std::make_shared<const VariableContext>(std::move(names),
                                                 std::vector<unsigned>(count, degree));
}

std::size_t VariableContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return names_.size();
}

bool same_context(const VariableContext& a, const VariableContext& b) {
  return &a == &b || a == b;
}

// ---------------------------------------------------------------------------

namespace {

std::uint16_t checked_exponent(unsigned long e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) throw UsageError("exponent overflow");
  return static_cast<std::uint16_t>(e);
}

}  // namespace

Monomial Monomial::from_exponents(std::span<const unsigned> exponents, const VariableContext& ctx) {
  if (exponents.size() != ctx.size()) throw UsageError("exponent vector length mismatch");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    m.exps_[i] = checked_exponent(exponents[i]);
    m.degree_ += exponents[i] * ctx.degree(i);
  }
  return m;
}

Monomial Monomial::variable(std::size_t i, const VariableContext& ctx) {
  if (i >= ctx.size()) throw UsageError("variable index out of range");
  Monomial m;
  m.exps_[i] = 1;
  m.degree_ = ctx.degree(i);
  return m;
}

std::uint32_t Monomial::support_mask() const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] != 0) mask |= (1u << i);
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = checked_exponent(static_cast<unsigned long>(exps_[i]) + other.exps_[i]);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(numerator.exps_[i] - exps_[i]);
  }
  r.degree_ = numerator.degree_ - degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b, const VariableContext& ctx) {
  Monomial r;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    r.degree_ += r.exps_[i] * ctx.degree(i);
  }
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  return (a.support_mask() & b.support_mask()) == 0;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const Monomial& m, const VariableContext& ctx) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool term_greater(const Term& a, const Term& b) { return degrevlex_greater(a.monomial, b.monomial); }

using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<Term> collect(TermMap&& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, std::move(c)});
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  return terms;
}

}  // namespace

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw UsageError("polynomial requires a variable context");
}

Polynomial::Polynomial(ContextPtr ctx, std::vector<Term> sorted_terms)
    : ctx_(std::move(ctx)), terms_(std::move(sorted_terms)) {}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  if (!ctx) throw UsageError("polynomial requires a variable context");
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
  return Polynomial(std::move(ctx), std::move(merged));
}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
  return monomial(std::move(ctx), Monomial{}, c);
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t i) {
  auto m = Monomial::variable(i, *ctx);
  return monomial(std::move(ctx), m, 1);
}

Polynomial Polynomial::monomial(ContextPtr ctx, const Monomial& m, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::parse(ContextPtr ctx, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw UsageError("empty polynomial text");
  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!terms.empty()) {
      throw UsageError("expected '+' or '-' in polynomial text");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string_view body(s.data() + pos, end - pos);
    if (body.empty()) throw UsageError("empty term in polynomial text");
    pos = end;

    Rational coeff = sign;
    std::vector<unsigned> exps(ctx->size(), 0);
    std::size_t fpos = 0;
    bool first = true;
    while (fpos <= body.size()) {
      auto star = body.find('*', fpos);
      if (star == std::string_view::npos) star = body.size();
      std::string_view factor = body.substr(fpos, star - fpos);
      if (factor.empty()) throw UsageError("empty factor in polynomial text");
      if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
        if (!first) throw UsageError("coefficient must lead its term");
        coeff *= parse_rational(factor);
      } else {
        auto caret = factor.find('^');
        auto name = factor.substr(0, caret);
        auto idx = ctx->index_of(name);
        if (idx == ctx->size()) throw UsageError("unknown variable '" + std::string(name) + "'");
        unsigned e = 1;
        if (caret != std::string_view::npos) {
          auto digits = factor.substr(caret + 1);
          if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
                return std::isdigit(c) != 0;
              })) {
            throw UsageError("malformed exponent in '" + std::string(factor) + "'");
          }
          e = static_cast<unsigned>(std::stoul(std::string(digits)));
        }
        exps[idx] += e;
      }
      first = false;
      fpos = star + 1;
    }
    terms.push_back({Monomial::from_exponents(exps, *ctx), coeff});
  }
  return from_terms(std::move(ctx), std::move(terms));
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous(unsigned d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.monomial.degree() == d; });
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || is_homogeneous(terms_.front().monomial.degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return degrevlex_greater(t.monomial, key);
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    Rational mag = abs(t.coeff);
    if (t.monomial.is_one()) {
      out += biq::to_string(mag);
    } else {
      if (mag != 1) out += biq::to_string(mag) + '*';
      out += biq::to_string(t.monomial, *ctx_);
    }
    first = false;
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) { return *this = add(*this, q); }
Polynomial& Polynomial::operator-=(const Polynomial& q) { return *this = sub(*this, q); }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

bool operator==(const Polynomial& p, const Polynomial& q) {
  return same_context(*p.ctx_, *q.ctx_) && p.terms_ == q.terms_;
}

void require_same_context(const Polynomial& p, const Polynomial& q) {
  if (!same_context(*p.context(), *q.context())) {
    throw UsageError("polynomials belong to different rings");
  }
}

namespace {

Polynomial merge(const Polynomial& p, const Polynomial& q, bool negate_q) {
  require_same_context(p, q);
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  auto a = p.terms().begin(), ae = p.terms().end();
  auto b = q.terms().begin(), be = q.terms().end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && degrevlex_greater(a->monomial, b->monomial))) {
      out.push_back(*a++);
    } else if (a == ae || degrevlex_greater(b->monomial, a->monomial)) {
      out.push_back({b->monomial, negate_q ? Rational(-b->coeff) : b->coeff});
      ++b;
    } else {
      Rational c = negate_q ? Rational(a->coeff - b->coeff) : Rational(a->coeff + b->coeff);
      if (c != 0) out.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  return Polynomial::from_terms(p.context(), std::move(out));
}

}  // namespace

Polynomial add(const Polynomial& p, const Polynomial& q) { return merge(p, q, false); }
Polynomial sub(const Polynomial& p, const Polynomial& q) { return merge(p, q, true); }

Polynomial mul(const Polynomial& p, const Polynomial& q) {
  require_same_context(p, q);
  TermMap acc;
  acc.reserve(p.size() * q.size());
  Rational prod;
  for (const auto& s : p.terms()) {
    for (const auto& t : q.terms()) {
      mpq_mul(prod.get_mpq_t(), s.coeff.get_mpq_t(), t.coeff.get_mpq_t());
      acc[s.monomial * t.monomial] += prod;
    }
  }
  return Polynomial::from_terms(p.context(), collect(std::move(acc)));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r = p;
  r *= c;
  return r;
}

Polynomial pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(p.context(), 1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

Polynomial elementary_symmetric(unsigned i, std::span<const Polynomial> args) {
  if (args.empty()) throw UsageError("elementary_symmetric needs at least one argument");
  const auto& ctx = args.front().context();
  for (const auto& a : args) require_same_context(args.front(), a);
  if (i > args.size()) return Polynomial(ctx);
  if (i == 0) return Polynomial::constant(ctx, 1);

  // e[j] holds e_j of the prefix processed so far.
  std::vector<Polynomial> e(i + 1, Polynomial(ctx));
  e[0] = Polynomial::constant(ctx, 1);
  for (std::size_t n = 0; n < args.size(); ++n) {
    const std::size_t top = std::min<std::size_t>(i, n + 1);
    for (std::size_t j = top; j >= 1; --j) e[j] = add(e[j], mul(args[n], e[j - 1]));
  }
  return e[i];
}

Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) {
  const auto& src = *p.context();
  if (images.size() != src.size()) {
    throw UsageError("substitute: expected " + std::to_string(src.size()) + " images, got " +
                     std::to_string(images.size()));
  }
  if (images.empty()) throw UsageError("substitute: no target ring");
  const auto& target = images.front().context();
  for (std::size_t j = 0; j < images.size(); ++j) {
    require_same_context(images.front(), images[j]);
    if (!images[j].is_homogeneous(src.degree(j))) {
      throw UsageError("substitute: image of " + src.name(j) + " is not homogeneous of degree " +
                       std::to_string(src.degree(j)));
    }
  }

  // powers[j][e] = images[j]^e, filled on demand.
  std::vector<std::vector<Polynomial>> powers(images.size());
  const auto power = [&](std::size_t j, unsigned e) -> const Polynomial& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(mul(cache.back(), images[j]));
    return cache[e];
  };

  TermMap acc;
  Rational prod;
  for (const auto& t : p.terms()) {
    Polynomial image = Polynomial::constant(target, t.coeff);
    for (std::size_t j = 0; j < src.size() && !image.is_zero(); ++j) {
      if (t.monomial[j] != 0) image = mul(image, power(j, t.monomial[j]));
    }
    for (const auto& s : image.terms()) acc[s.monomial] += s.coeff;
  }
  return Polynomial::from_terms(target, collect(std::move(acc)));
}

Polynomial homogeneous_component(const Polynomial& p, unsigned d) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    if (t.monomial.degree() == d) terms.push_back(t);
  }
  return Polynomial::from_terms(p.context(), std::move(terms));
}

}  // namespace biq
