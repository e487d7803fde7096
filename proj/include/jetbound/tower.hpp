#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jetbound/polynomial.hpp"

namespace jetbound {

// Dimensions of the Demailly-Semple tower X_k -> ... -> X_1 -> X over an
// n-dimensional base with a rank r = n bundle.
class TowerContext {
 public:
  TowerContext(int n, int k);

  int n() const { return n_; }
  int rank() const { return n_; }
  int order() const { return k_; }
  // dim X_k = n + k(r - 1)
  int total_dim() const { return n_ + k_ * (n_ - 1); }

  VariableId u(int level) const;
  VariableId c(int l) const;
  VariableId h() const { return VariableId::h(); }

  // Cohomological degree grading: u_j and h have degree 1, c_l has degree l.
  const GradedTruncation& cohomological_grading() const { return grading_; }
  // Degree on the base X only (u_j weighted 0). Classes above n vanish on X.
  const GradedTruncation& base_grading() const { return base_grading_; }

  friend bool operator==(const TowerContext& x, const TowerContext& y) { return x.n_ == y.n_ && x.k_ == y.k_; }

 private:
  int n_;
  int k_;
  GradedTruncation grading_;
  GradedTruncation base_grading_;
};

// Cohomological degree of a homogeneous class, nullopt for zero. Throws
// InputError if the class mixes degrees.
std::optional<unsigned> homogeneous_degree(const Polynomial& p, const TowerContext& ctx);

// Chern classes c_l^{[j]} of V_j for j = 0..k-1 and the monic relations
// q_1..q_k. Built once; immutable afterwards.
class RelationSet {
 public:
  explicit RelationSet(const TowerContext& ctx);

  const TowerContext& context() const { return ctx_; }
  // c_l^{[j]}, 0 <= level <= k-1, 1 <= l <= r. Zero for l > r.
  const Polynomial& lifted_chern(int level, int l) const;
  // q_j, 1 <= j <= k, monic of degree r in u_j.
  const Polynomial& relation(int j) const;

  // One relation per line, used in cache keys.
  std::string canonical_text() const;

 private:
  TowerContext ctx_;
  std::vector<std::vector<Polynomial>> chern_;  // [level][l-1]
  std::vector<Polynomial> relations_;           // [j-1]
  Polynomial zero_;
};

RelationSet build_relations(const TowerContext& ctx);

struct ReduceOptions {
  // Drop terms whose base degree exceeds the cap. Sound for anything that is
  // later pushed forward to the base, since reduction never lowers the base
  // degree of a term. nullopt keeps every term.
  std::optional<unsigned> base_degree_cap;
};

// Canonical representative with deg_{u_j} < r for every j, reducing u_k first
// and u_1 last.
Polynomial reduce_tower(const Polynomial& p, const RelationSet& rels, const ReduceOptions& opts = {});

// reduce_tower(x * y). With a base-degree cap, products above the cap are
// never formed.
Polynomial reduced_product(const Polynomial& x, const Polynomial& y, const RelationSet& rels,
                           const ReduceOptions& opts = {});

// Pushforward to the base: extracts the u_j^{r-1} coefficient for j = k..1.
// Throws InputError when some u_j has degree >= r.
Polynomial integrate_fibers(const Polynomial& p, const TowerContext& ctx);

// integrate_fibers(reduce_tower(u_1^{e_1} ... u_k^{e_k} * extra)). Throws
// InputError unless sum(e) + deg(extra) = dim X_k.
Polynomial intersect(const RelationSet& rels, std::span<const unsigned> exponents, const Polynomial& extra = 1);

}  // namespace jetbound
