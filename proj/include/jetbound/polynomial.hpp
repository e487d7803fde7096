#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace jetbound {

using Integer = mpz_class;

inline constexpr int kMaxOrder = 9;      // largest supported jet order k
inline constexpr int kMaxRank = 9;       // largest supported rank r
inline constexpr std::size_t kMaxVariables = 32;

// Index of a ring variable in the global ordering
//   u1..u9, c1..c9, h, d, a1..a9.
// The layout is fixed so that polynomials print and parse without a context.
struct VariableId {
  std::uint8_t index = 0;

  friend constexpr auto operator<=>(VariableId, VariableId) = default;

  static VariableId u(int level);   // 1-based tower level
  static VariableId c(int l);       // 1-based Chern class index
  static VariableId h();
  static VariableId d();
  static VariableId a(int j);       // 1-based weight index

  bool is_u() const { return index < kMaxOrder; }
  bool is_c() const { return index >= kMaxOrder && index < kMaxOrder + kMaxRank; }
  bool is_h() const { return index == kMaxOrder + kMaxRank; }
  bool is_d() const { return index == kMaxOrder + kMaxRank + 1; }
  bool is_a() const { return index >= kMaxOrder + kMaxRank + 2 && index < kMaxOrder + kMaxRank + 2 + kMaxOrder; }

  // Level, Chern index or weight index for u/c/a variables.
  int subscript() const;

  std::string name() const;
  static std::optional<VariableId> parse(std::string_view name);
};

inline constexpr std::size_t kUsedVariables = 2 * kMaxOrder + kMaxRank + 2;
static_assert(kUsedVariables <= kMaxVariables);

// Power product with a packed exponent vector. Zero exponents are implicit;
// factors() gives the sparse view.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(VariableId v, unsigned exponent = 1);

  unsigned exponent(VariableId v) const { return exps_[v.index]; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  Monomial with_exponent(VariableId v, unsigned exponent) const;
  Monomial operator*(const Monomial& other) const;

  std::vector<std::pair<VariableId, unsigned>> factors() const;

  // Weighted degree sum_v weight[v] * exponent(v).
  unsigned weighted_degree(const std::array<std::uint8_t, kMaxVariables>& weights) const;

  std::size_t hash() const;

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.exps_ == y.exps_; }

  // Graded lexicographic: total degree first, then lexicographic over the
  // variable ordering (a larger exponent on an earlier variable is larger).
  friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
    if (auto cmp = x.degree_ <=> y.degree_; cmp != 0) return cmp;
    return x.exps_ <=> y.exps_;
  }

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Keeps only monomials whose weighted degree is at most `cap`. Used to drop
// classes that vanish for dimension reasons before they are ever expanded.
struct GradedTruncation {
  std::array<std::uint8_t, kMaxVariables> weights{};
  unsigned cap = 0;

  bool admits(const Monomial& m) const { return m.weighted_degree(weights) <= cap; }
};

// Sparse polynomial with integer coefficients. Terms are kept sorted in
// decreasing graded-lex order with no zero coefficients, so equality of
// polynomials is equality of term lists.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Integer>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Integer& constant);

  static Polynomial variable(VariableId v, unsigned exponent = 1);
  static Polynomial term(const Monomial& m, const Integer& coefficient);
  // Accepts unsorted input with repeated monomials and zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  Integer coefficient(const Monomial& m) const;
  const Term& leading_term() const { return terms_.front(); }
  // Largest total degree, or nullopt for zero.
  std::optional<unsigned> total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Integer& scalar);

  friend Polynomial operator+(Polynomial x, const Polynomial& y) { return x += y; }
  friend Polynomial operator-(Polynomial x, const Polynomial& y) { return x -= y; }
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(Polynomial x, const Integer& s) { return x *= s; }
  friend Polynomial operator*(const Integer& s, Polynomial x) { return x *= s; }

  friend bool operator==(const Polynomial& x, const Polynomial& y) { return x.terms_ == y.terms_; }

  // Multiplies every monomial by `m`; order is preserved.
  Polynomial shifted(const Monomial& m) const;

  // Drops terms rejected by the truncation.
  Polynomial truncated(const GradedTruncation& trunc) const;

  std::string to_string() const;
  static Polynomial parse(std::string_view text);

 private:
  friend class PolynomialBuilder;
  explicit Polynomial(std::vector<Term> sorted_terms, int /*tag*/) : terms_(std::move(sorted_terms)) {}

  std::vector<Term> terms_;
};

// Accumulates terms in a hash table; build() canonicalizes.
class PolynomialBuilder {
 public:
  explicit PolynomialBuilder(const GradedTruncation* trunc = nullptr) : trunc_(trunc) {}

  void add(const Monomial& m, const Integer& coefficient);
  void add(const Polynomial& p);
  // this += x * y
  void add_product(const Polynomial& x, const Polynomial& y);

  Polynomial build() &&;

 private:
  const GradedTruncation* trunc_;
  std::unordered_map<Monomial, Integer, MonomialHash> table_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q, const GradedTruncation& trunc);
Polynomial pow(const Polynomial& p, unsigned exponent);
Polynomial pow(const Polynomial& p, unsigned exponent, const GradedTruncation& trunc);

// Degree in one variable; nullopt stands for minus infinity (the zero
// polynomial). std::optional orders nullopt below every value.
using Degree = std::optional<unsigned>;
inline constexpr Degree kMinusInfinity = std::nullopt;

Degree degree_in(const Polynomial& p, VariableId v);

// Polynomial multiplying v^e in p, with v removed.
Polynomial coeff_of(const Polynomial& p, VariableId v, unsigned e);

// All coefficients of p as a polynomial in v: result[e] = coeff_of(p, v, e).
std::vector<Polynomial> slices_in(const Polynomial& p, VariableId v);

Polynomial substitute(const Polynomial& p, VariableId v, const Polynomial& q);

// Remainder of p modulo a relation monic in v. Throws InputError if `rel` is
// not monic of positive degree in v.
Polynomial reduce_monic(const Polynomial& p, VariableId v, const Polynomial& rel);
Polynomial reduce_monic(const Polynomial& p, VariableId v, const Polynomial& rel,
                        const GradedTruncation* trunc);

Polynomial eval_at_integer(const Polynomial& p, VariableId v, const Integer& x);

}  // namespace jetbound
