// Test-only helpers: random inputs and oracles that do not share code paths
// with the library.
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "jetbound/polynomial.hpp"

namespace jetbound::testing {

inline Polynomial P(const char* text) { return Polynomial::parse(text); }

// Random sparse polynomial over the given variables.
inline Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<VariableId>& vars, int max_terms = 5,
                                    unsigned max_exp = 3, long max_coeff = 9) {
  std::uniform_int_distribution<int> n_terms(0, max_terms);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<long> coeff(-max_coeff, max_coeff);
  std::vector<Polynomial::Term> terms;
  const int count = n_terms(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m;
    for (auto v : vars)
      if (rng() % 2) m = m * Monomial::of(v, exp(rng));
    terms.emplace_back(m, Integer(coeff(rng)));
  }
  return Polynomial::from_terms(std::move(terms));
}

// Random relation monic of degree r in v, other coefficients over `coeff_vars`.
inline Polynomial random_monic(std::mt19937_64& rng, VariableId v, unsigned r, const std::vector<VariableId>& coeff_vars) {
  Polynomial rel = Polynomial::variable(v, r);
  for (unsigned e = 0; e < r; ++e)
    rel += random_polynomial(rng, coeff_vars, 2, 2, 5).shifted(Monomial::of(v, e));
  return rel;
}

// Dense univariate evaluation.
inline mpz_class eval_dense(const std::vector<mpz_class>& ascending, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = ascending.size(); i-- > 0;) acc = acc * x + ascending[i];
  return acc;
}

// Brute-force threshold: scan every integer from the bound down to 1.
inline std::optional<mpz_class> scan_threshold(const std::vector<mpz_class>& ascending) {
  if (ascending.empty() || ascending.back() <= 0) return std::nullopt;
  mpz_class biggest = 0;
  for (std::size_t i = 0; i + 1 < ascending.size(); ++i)
    if (abs(ascending[i]) > biggest) biggest = abs(ascending[i]);
  const mpz_class bound = biggest / ascending.back() + 2;
  for (mpz_class x = bound; x >= 1; --x)
    if (eval_dense(ascending, x) <= 0) return mpz_class(x + 1);
  return mpz_class(1);
}

// Exact least-squares-free solve of a consistent (possibly overdetermined)
// rational system by Gauss-Jordan. Returns nullopt if inconsistent or rank
// deficient.
inline std::optional<std::vector<mpq_class>> solve_exact(std::vector<std::vector<mpq_class>> rows,
                                                         std::vector<mpq_class> rhs) {
  const std::size_t m = rows.size();
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t i = 0; i < m; ++i) rows[i].push_back(rhs[i]);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = pivot_row;
    while (sel < m && rows[sel][col] == 0) ++sel;
    if (sel == m) return std::nullopt;
    std::swap(rows[sel], rows[pivot_row]);
    const mpq_class inv = 1 / rows[pivot_row][col];
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pivot_row || rows[i][col] == 0) continue;
      const mpq_class f = rows[i][col];
      for (std::size_t j = col; j <= n; ++j) rows[i][j] -= f * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  for (std::size_t i = n; i < m; ++i)
    if (rows[i][n] != 0) return std::nullopt;
  std::vector<mpq_class> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = rows[i][n];
  return out;
}

// Multinomial coefficient (sum e)! / prod e_i!.
inline mpz_class multinomial(const std::vector<unsigned>& e) {
  mpz_class out = 1;
  unsigned total = 0;
  for (unsigned x : e) {
    for (unsigned i = 1; i <= x; ++i) {
      ++total;
      out *= total;
      out /= i;
    }
  }
  return out;
}

}  // namespace jetbound::testing
