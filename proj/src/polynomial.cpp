#include "jetbound/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <functional>
#include <limits>

#include "jetbound/errors.hpp"

namespace jetbound {

namespace {

constexpr int kCBase = kMaxOrder;
constexpr int kHIndex = kMaxOrder + kMaxRank;
constexpr int kDIndex = kHIndex + 1;
constexpr int kABase = kDIndex + 1;

bool term_greater(const Polynomial::Term& x, const Polynomial::Term& y) { return x.first > y.first; }

}  // namespace

// ---------------------------------------------------------------- VariableId

VariableId VariableId::u(int level) {
  if (level < 1 || level > kMaxOrder) throw InputError("tower level out of range: " + std::to_string(level));
  return VariableId{static_cast<std::uint8_t>(level - 1)};
}

VariableId VariableId::c(int l) {
  if (l < 1 || l > kMaxRank) throw InputError("Chern class index out of range: " + std::to_string(l));
  return VariableId{static_cast<std::uint8_t>(kCBase + l - 1)};
}

VariableId VariableId::h() { return VariableId{kHIndex}; }
VariableId VariableId::d() { return VariableId{kDIndex}; }

VariableId VariableId::a(int j) {
  if (j < 1 || j > kMaxOrder) throw InputError("weight index out of range: " + std::to_string(j));
  return VariableId{static_cast<std::uint8_t>(kABase + j - 1)};
}

int VariableId::subscript() const {
  if (is_u()) return index + 1;
  if (is_c()) return index - kCBase + 1;
  if (is_a()) return index - kABase + 1;
  return 0;
}

std::string VariableId::name() const {
  if (is_u()) return "u" + std::to_string(subscript());
  if (is_c()) return "c" + std::to_string(subscript());
  if (is_h()) return "h";
  if (is_d()) return "d";
  if (is_a()) return "a" + std::to_string(subscript());
  throw InvariantError("unnamed variable index " + std::to_string(index));
}

std::optional<VariableId> VariableId::parse(std::string_view name) {
  if (name == "h") return h();
  if (name == "d") return d();
  if (name.size() != 2 || name[1] < '1' || name[1] > '9') return std::nullopt;
  const int sub = name[1] - '0';
  switch (name[0]) {
    case 'u': return u(sub);
    case 'c': return c(sub);
    case 'a': return a(sub);
    default: return std::nullopt;
  }
}

// ------------------------------------------------------------------ Monomial

Monomial Monomial::of(VariableId v, unsigned exponent) { return Monomial{}.with_exponent(v, exponent); }

Monomial Monomial::with_exponent(VariableId v, unsigned exponent) const {
  if (exponent > std::numeric_limits<std::uint8_t>::max()) throw InputError("exponent overflow");
  Monomial m = *this;
  m.degree_ = static_cast<std::uint16_t>(m.degree_ - m.exps_[v.index] + exponent);
  m.exps_[v.index] = static_cast<std::uint8_t>(exponent);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kUsedVariables; ++i) {
    const unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<std::uint8_t>::max()) throw InputError("exponent overflow");
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return m;
}

std::vector<std::pair<VariableId, unsigned>> Monomial::factors() const {
  std::vector<std::pair<VariableId, unsigned>> out;
  for (std::size_t i = 0; i < kUsedVariables; ++i)
    if (exps_[i] != 0) out.emplace_back(VariableId{static_cast<std::uint8_t>(i)}, exps_[i]);
  return out;
}

unsigned Monomial::weighted_degree(const std::array<std::uint8_t, kMaxVariables>& weights) const {
  unsigned total = 0;
  for (std::size_t i = 0; i < kUsedVariables; ++i) total += unsigned{weights[i]} * exps_[i];
  return total;
}

std::size_t Monomial::hash() const {
  std::uint64_t words[4];
  std::memcpy(words, exps_.data(), sizeof(words));
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

// ------------------------------------------------------- PolynomialBuilder

void PolynomialBuilder::add(const Monomial& m, const Integer& coefficient) {
  if (coefficient == 0) return;
  if (trunc_ && !trunc_->admits(m)) return;
  auto [it, inserted] = table_.try_emplace(m, coefficient);
  if (!inserted) it->second += coefficient;
}

void PolynomialBuilder::add(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) add(m, c);
}

void PolynomialBuilder::add_product(const Polynomial& x, const Polynomial& y) {
  table_.reserve(table_.size() + x.size() * y.size() / 2);
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      const Monomial m = mx * my;
      if (trunc_ && !trunc_->admits(m)) continue;
      auto [it, inserted] = table_.try_emplace(m);
      mpz_addmul(it->second.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
    }
  }
}

Polynomial PolynomialBuilder::build() && {
  std::vector<Polynomial::Term> terms;
  terms.reserve(table_.size());
  for (auto& [m, c] : table_)
    if (c != 0) terms.emplace_back(m, std::move(c));
  table_.clear();
  std::sort(terms.begin(), terms.end(), term_greater);
  return Polynomial(std::move(terms), 0);
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long constant) {
  if (constant != 0) terms_.emplace_back(Monomial{}, Integer(constant));
}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace_back(Monomial{}, constant);
}

Polynomial Polynomial::variable(VariableId v, unsigned exponent) { return term(Monomial::of(v, exponent), 1); }

Polynomial Polynomial::term(const Monomial& m, const Integer& coefficient) {
  Polynomial p;
  if (coefficient != 0) p.terms_.emplace_back(m, coefficient);
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  PolynomialBuilder builder;
  for (const auto& [m, c] : terms) builder.add(m, c);
  return std::move(builder).build();
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first > key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

std::optional<unsigned> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().first.degree();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

namespace {

// Sorted merge of two canonical term lists, y scaled by `sign`.
std::vector<Polynomial::Term> merge_terms(std::span<const Polynomial::Term> x, std::span<const Polynomial::Term> y,
                                          int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first > y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first > x[i].first) {
      out.emplace_back(y[j].first, sign > 0 ? y[j].second : Integer(-y[j].second));
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(x[i].second + y[j].second) : Integer(x[i].second - y[j].second);
      if (c != 0) out.emplace_back(x[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.second *= scalar;
  }
  return *this;
}

Polynomial operator*(const Polynomial& x, const Polynomial& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (y.size() == 1) {
    Polynomial out = x.shifted(y.terms_[0].first);
    return out *= y.terms_[0].second;
  }
  if (x.size() == 1) {
    Polynomial out = y.shifted(x.terms_[0].first);
    return out *= x.terms_[0].second;
  }
  PolynomialBuilder builder;
  builder.add_product(x, y);
  return std::move(builder).build();
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  if (m.is_one()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [mono, c] : terms_) out.emplace_back(mono * m, c);
  return Polynomial(std::move(out), 0);
}

Polynomial Polynomial::truncated(const GradedTruncation& trunc) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (trunc.admits(t.first)) out.push_back(t);
  return Polynomial(std::move(out), 0);
}

// ---------------------------------------------------- text serialization

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Integer magnitude = abs(c);
    const auto factors = m.factors();
    bool need_star = false;
    if (factors.empty() || magnitude != 1) {
      out += magnitude.get_str();
      need_star = true;
    }
    for (const auto& [v, e] : factors) {
      if (need_star) out += "*";
      out += v.name();
      if (e != 1) out += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    PolynomialBuilder builder;
    skip_space();
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    parse_term(builder, sign);
    while (true) {
      skip_space();
      if (at_end()) break;
      const char op = text_[pos_++];
      if (op == '+') {
        parse_term(builder, 1);
      } else if (op == '-') {
        parse_term(builder, -1);
      } else {
        fail("expected '+' or '-'");
      }
    }
    return std::move(builder).build();
  }

 private:
  void parse_term(PolynomialBuilder& builder, int sign) {
    Integer coefficient = sign;
    Monomial mono;
    bool first = true;
    while (true) {
      skip_space();
      if (!first) {
        if (peek() != '*') break;
        ++pos_;
        skip_space();
      }
      first = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coefficient *= Integer(read_digits());
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const auto name = text_.substr(start, pos_ - start);
        const auto v = VariableId::parse(name);
        if (!v) fail("unknown variable '" + std::string(name) + "'");
        unsigned e = 1;
        skip_space();
        if (peek() == '^') {
          ++pos_;
          skip_space();
          if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          e = static_cast<unsigned>(std::stoul(read_digits()));
        }
        mono = mono * Monomial::of(*v, e);
      } else {
        fail("expected coefficient or variable");
      }
    }
    builder.add(mono, coefficient);
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------- operations

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial mul(const Polynomial& p, const Polynomial& q, const GradedTruncation& trunc) {
  PolynomialBuilder builder(&trunc);
  builder.add_product(p, q);
  return std::move(builder).build();
}

namespace {

Polynomial pow_impl(const Polynomial& p, unsigned exponent, const GradedTruncation* trunc) {
  Polynomial result = trunc ? Polynomial(1).truncated(*trunc) : Polynomial(1);
  Polynomial base = trunc ? p.truncated(*trunc) : p;
  auto times = [trunc](const Polynomial& x, const Polynomial& y) { return trunc ? mul(x, y, *trunc) : x * y; };
  while (exponent > 0) {
    if (exponent & 1U) result = times(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = times(base, base);
  }
  return result;
}

}  // namespace

Polynomial pow(const Polynomial& p, unsigned exponent) { return pow_impl(p, exponent, nullptr); }

Polynomial pow(const Polynomial& p, unsigned exponent, const GradedTruncation& trunc) {
  return pow_impl(p, exponent, &trunc);
}

Degree degree_in(const Polynomial& p, VariableId v) {
  Degree best = kMinusInfinity;
  for (const auto& [m, c] : p.terms()) best = std::max(best, Degree{m.exponent(v)});
  return best;
}

Polynomial coeff_of(const Polynomial& p, VariableId v, unsigned e) {
  // Every kept monomial loses the same power of v, so the order is preserved.
  std::vector<Polynomial::Term> out;
  for (const auto& [m, c] : p.terms())
    if (m.exponent(v) == e) out.emplace_back(m.with_exponent(v, 0), c);
  return Polynomial::from_terms(std::move(out));
}

std::vector<Polynomial> slices_in(const Polynomial& p, VariableId v) {
  const Degree deg = degree_in(p, v);
  if (!deg) return {};
  std::vector<std::vector<Polynomial::Term>> buckets(*deg + 1);
  for (const auto& [m, c] : p.terms()) buckets[m.exponent(v)].emplace_back(m.with_exponent(v, 0), c);
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(std::move(b)));
  return out;
}

Polynomial substitute(const Polynomial& p, VariableId v, const Polynomial& q) {
  const auto slices = slices_in(p, v);
  if (slices.empty()) return {};
  // Horner in v.
  Polynomial acc = slices.back();
  for (std::size_t e = slices.size() - 1; e-- > 0;) acc = acc * q + slices[e];
  return acc;
}

Polynomial reduce_monic(const Polynomial& p, VariableId v, const Polynomial& rel) {
  return reduce_monic(p, v, rel, nullptr);
}

Polynomial reduce_monic(const Polynomial& p, VariableId v, const Polynomial& rel, const GradedTruncation* trunc) {
  const Degree rel_deg = degree_in(rel, v);
  if (!rel_deg || *rel_deg == 0) throw InputError("relation has no positive degree in " + v.name());
  const unsigned r = *rel_deg;
  auto tail = slices_in(rel, v);
  if (tail[r] != Polynomial(1)) throw InputError("relation is not monic in " + v.name());

  const Degree p_deg = degree_in(p, v);
  if (!p_deg || *p_deg < r) return trunc ? p.truncated(*trunc) : p;

  auto slices = slices_in(p, v);
  // v^r = -(tail[r-1] v^{r-1} + ... + tail[0])
  for (unsigned e = *p_deg; e >= r; --e) {
    if (slices[e].is_zero()) continue;
    const Polynomial lead = -slices[e];
    for (unsigned i = 0; i < r; ++i) {
      if (tail[i].is_zero()) continue;
      if (trunc) {
        PolynomialBuilder b(trunc);
        b.add(slices[e - r + i]);
        b.add_product(lead, tail[i]);
        slices[e - r + i] = std::move(b).build();
      } else {
        slices[e - r + i] += lead * tail[i];
      }
    }
  }
  PolynomialBuilder out(trunc);
  for (unsigned e = 0; e < r; ++e) out.add(slices[e].shifted(Monomial::of(v, e)));
  return std::move(out).build();
}

Polynomial eval_at_integer(const Polynomial& p, VariableId v, const Integer& x) {
  const auto slices = slices_in(p, v);
  if (slices.empty()) return {};
  Polynomial acc = slices.back();
  for (std::size_t e = slices.size() - 1; e-- > 0;) acc = acc * x + slices[e];
  return acc;
}

}  // namespace jetbound
