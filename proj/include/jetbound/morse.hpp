#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jetbound/geometry.hpp"
#include "jetbound/polynomial.hpp"
#include "jetbound/tower.hpp"

namespace jetbound {

// True iff a_1 >= 3a_2, ..., a_{k-2} >= 3a_{k-1} and a_{k-1} >= 2a_k > 0
// (a_1 > 0 when k = 1). Under this chain O_{X_k}(a) is relatively nef.
bool is_admissible(std::span<const std::int64_t> a);

// Weights a = (a_1, ..., a_k) on the tower levels, always admissible.
class WeightVector {
 public:
  // Throws InputError if `a` is empty, longer than kMaxOrder or inadmissible.
  explicit WeightVector(std::vector<std::int64_t> a);

  std::span<const std::int64_t> values() const { return a_; }
  std::size_t size() const { return a_.size(); }
  std::int64_t operator[](std::size_t i) const { return a_[i]; }
  // b_j = a_1 + ... + a_j
  std::vector<std::int64_t> partial_sums() const;
  // |a| = b_k
  std::int64_t total() const;

  WeightVector scaled(std::int64_t factor) const;

  std::string to_string() const;  // "6,2,1"
  static WeightVector parse(std::string_view text);

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<std::int64_t> a_;
};

// (2*3^{k-2}, ..., 6, 2, 1); (1) for k = 1.
WeightVector default_weights(int k);

// F = sum a_j u_j + 2|a| h, the twisted line bundle that is nef on X_k.
Polynomial twisted_class(const TowerContext& ctx, const WeightVector& a);
// G = 2|a| h.
Polynomial twist_class(const WeightVector& a);

// (F - N G) F^{N-1} with N = dim X_k: the Morse criterion
// F^N - N F^{N-1} G as one product.
Polynomial morse_class(const TowerContext& ctx, const WeightVector& a);

// evaluate_in_degree(integrate_fibers(reduce_tower(morse_class))). Reduces
// after every multiplication and drops classes above the base dimension;
// the result equals the literal route.
EvaluatedClass morse_polynomial(int n, int k, const WeightVector& a, const GeometrySpec& spec);
EvaluatedClass morse_polynomial(const RelationSet& rels, const WeightVector& a, const GeometrySpec& spec);

// The literal pipeline: expand morse_class, reduce with no truncation,
// integrate, evaluate. Exponentially slower; kept as a cross-check.
EvaluatedClass morse_polynomial_expanded(const RelationSet& rels, const WeightVector& a, const GeometrySpec& spec);

// Smallest delta >= 1 with P(d) > 0 for every integer d >= delta, or nullopt
// when the leading coefficient is <= 0.
std::optional<Integer> degree_threshold(const EvaluatedClass& p);

// Upper bound 1 + ceil(max|c_i| / |lc|) on the absolute value of every real
// root. Throws InputError on the zero polynomial.
Integer cauchy_bound(const EvaluatedClass& p);

// Number of distinct real roots in the open interval (lo, hi), by a Sturm
// sequence over the rationals. Throws InputError if lo or hi is a root.
std::size_t count_real_roots(const EvaluatedClass& p, const Integer& lo, const Integer& hi);

// Coefficient of d^{n+1} in the evaluated top self-intersection O(a)^N,
// i.e. (sum a_j u_j)^N with no twist and no Morse correction.
Integer leading_degree_coefficient(int n, int k, const WeightVector& a, const GeometrySpec& spec);
Integer leading_degree_coefficient(const RelationSet& rels, const WeightVector& a, const GeometrySpec& spec);

// Same coefficient with the a_j kept symbolic: a homogeneous polynomial of
// degree N in a_1..a_k (or zero). Practical for small n only.
Polynomial symbolic_leading_coefficient(const RelationSet& rels, const GeometrySpec& spec);

struct MorseReport {
  int n = 0;
  int k = 0;
  GeometryKind geometry = GeometryKind::logarithmic_pair;
  WeightVector weights{{1}};
  int total_dim = 0;
  EvaluatedClass morse_poly;
  Integer leading_coeff;
  std::optional<Integer> threshold;
  std::chrono::milliseconds elapsed{0};
};

MorseReport compute_report(int n, int k, const WeightVector& a, GeometryKind geometry);

}  // namespace jetbound
