#include "jetbound/tower.hpp"

#include <sstream>

#include "jetbound/errors.hpp"

namespace jetbound {

namespace {

long binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  long result = 1;
  for (long i = 1; i <= bottom; ++i) result = result * (top - bottom + i) / i;
  return result;
}

}  // namespace

TowerContext::TowerContext(int n, int k) : n_(n), k_(k) {
  if (n < 1 || n > kMaxRank) throw InputError("dimension out of range: " + std::to_string(n));
  if (k < 1 || k > kMaxOrder) throw InputError("jet order out of range: " + std::to_string(k));
  for (int j = 1; j <= kMaxOrder; ++j) grading_.weights[VariableId::u(j).index] = 1;
  for (int l = 1; l <= kMaxRank; ++l) {
    grading_.weights[VariableId::c(l).index] = static_cast<std::uint8_t>(l);
    base_grading_.weights[VariableId::c(l).index] = static_cast<std::uint8_t>(l);
  }
  grading_.weights[VariableId::h().index] = 1;
  base_grading_.weights[VariableId::h().index] = 1;
  grading_.cap = static_cast<unsigned>(total_dim());
  base_grading_.cap = static_cast<unsigned>(n);
}

VariableId TowerContext::u(int level) const {
  if (level < 1 || level > k_) throw InputError("tower level out of range: " + std::to_string(level));
  return VariableId::u(level);
}

VariableId TowerContext::c(int l) const {
  if (l < 1 || l > rank()) throw InputError("Chern class index out of range: " + std::to_string(l));
  return VariableId::c(l);
}

std::optional<unsigned> homogeneous_degree(const Polynomial& p, const TowerContext& ctx) {
  std::optional<unsigned> deg;
  for (const auto& [m, c] : p.terms()) {
    const unsigned w = m.weighted_degree(ctx.cohomological_grading().weights);
    if (deg && *deg != w) throw InputError("class is not homogeneous: " + p.to_string());
    deg = w;
  }
  return deg;
}

// ---------------------------------------------------------------- relations

RelationSet::RelationSet(const TowerContext& ctx) : ctx_(ctx) {
  const int r = ctx.rank();
  const int k = ctx.order();

  chern_.resize(k);
  for (int l = 1; l <= r; ++l) chern_[0].push_back(Polynomial::variable(ctx.c(l)));

  // c_l^{[t]} = sum_{s=0}^{l} [C(r-s, l-s) - C(r-s, l-s-1)] u_t^{l-s} c_s^{[t-1]}
  for (int t = 1; t < k; ++t) {
    const auto& prev = chern_[t - 1];
    auto prev_class = [&](int s) { return s == 0 ? Polynomial(1) : prev[s - 1]; };
    const Polynomial ut = Polynomial::variable(ctx.u(t));
    std::vector<Polynomial> next;
    for (int l = 1; l <= r; ++l) {
      Polynomial cl;
      Polynomial ut_pow = 1;
      for (int s = l; s >= 0; --s) {
        const long coeff = binomial(r - s, l - s) - binomial(r - s, l - s - 1);
        if (coeff != 0) cl += prev_class(s) * ut_pow * Integer(coeff);
        ut_pow = ut_pow * ut;
      }
      next.push_back(std::move(cl));
    }
    chern_[t] = std::move(next);
  }

  // q_j = u_j^r + sum_l c_l^{[j-1]} u_j^{r-l}
  for (int j = 1; j <= k; ++j) {
    Polynomial q = Polynomial::variable(ctx.u(j), static_cast<unsigned>(r));
    for (int l = 1; l <= r; ++l)
      q += chern_[j - 1][l - 1].shifted(Monomial::of(ctx.u(j), static_cast<unsigned>(r - l)));
    relations_.push_back(std::move(q));
  }
}

const Polynomial& RelationSet::lifted_chern(int level, int l) const {
  if (level < 0 || level >= ctx_.order()) throw InputError("tower level out of range: " + std::to_string(level));
  if (l < 1) throw InputError("Chern class index out of range: " + std::to_string(l));
  if (l > ctx_.rank()) return zero_;
  return chern_[level][l - 1];
}

const Polynomial& RelationSet::relation(int j) const {
  if (j < 1 || j > ctx_.order()) throw InputError("relation index out of range: " + std::to_string(j));
  return relations_[j - 1];
}

std::string RelationSet::canonical_text() const {
  std::ostringstream out;
  out << "n=" << ctx_.n() << " r=" << ctx_.rank() << " k=" << ctx_.order() << '\n';
  for (int j = 1; j <= ctx_.order(); ++j) out << "q" << j << " = " << relations_[j - 1].to_string() << '\n';
  return out.str();
}

RelationSet build_relations(const TowerContext& ctx) { return RelationSet(ctx); }

// ---------------------------------------------------------------- reduction

namespace {

std::optional<GradedTruncation> truncation_for(const TowerContext& ctx, const ReduceOptions& opts) {
  if (!opts.base_degree_cap) return std::nullopt;
  GradedTruncation t = ctx.base_grading();
  t.cap = *opts.base_degree_cap;
  return t;
}

}  // namespace

Polynomial reduce_tower(const Polynomial& p, const RelationSet& rels, const ReduceOptions& opts) {
  const TowerContext& ctx = rels.context();
  const auto trunc = truncation_for(ctx, opts);
  const GradedTruncation* tp = trunc ? &*trunc : nullptr;
  Polynomial out = p;
  for (int j = ctx.order(); j >= 1; --j) out = reduce_monic(out, ctx.u(j), rels.relation(j), tp);
  return tp ? out.truncated(*tp) : out;
}

Polynomial reduced_product(const Polynomial& x, const Polynomial& y, const RelationSet& rels,
                           const ReduceOptions& opts) {
  const auto trunc = truncation_for(rels.context(), opts);
  const Polynomial product = trunc ? mul(x, y, *trunc) : x * y;
  return reduce_tower(product, rels, opts);
}

Polynomial integrate_fibers(const Polynomial& p, const TowerContext& ctx) {
  const unsigned r = static_cast<unsigned>(ctx.rank());
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [v, e] : m.factors()) {
      if (!v.is_u()) continue;
      if (v.subscript() > ctx.order()) throw InputError("class uses " + v.name() + " beyond the tower order");
      if (e >= r) throw InputError("class is not reduced: " + v.name() + "^" + std::to_string(e));
    }
  }
  Polynomial out = p;
  for (int j = ctx.order(); j >= 1; --j) out = coeff_of(out, ctx.u(j), r - 1);
  return out;
}

Polynomial intersect(const RelationSet& rels, std::span<const unsigned> exponents, const Polynomial& extra) {
  const TowerContext& ctx = rels.context();
  if (exponents.size() != static_cast<std::size_t>(ctx.order()))
    throw InputError("expected " + std::to_string(ctx.order()) + " exponents, got " +
                     std::to_string(exponents.size()));
  unsigned total = 0;
  Monomial mono;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    total += exponents[j];
    mono = mono * Monomial::of(ctx.u(static_cast<int>(j) + 1), exponents[j]);
  }
  if (extra.is_zero()) return {};
  const auto extra_deg = homogeneous_degree(extra, ctx);
  total += extra_deg.value_or(0);
  if (total != static_cast<unsigned>(ctx.total_dim()))
    throw InputError("intersection has degree " + std::to_string(total) + ", expected " +
                     std::to_string(ctx.total_dim()));
  const ReduceOptions opts{static_cast<unsigned>(ctx.n())};
  return integrate_fibers(reduce_tower(extra.shifted(mono), rels, opts), ctx);
}

}  // namespace jetbound
