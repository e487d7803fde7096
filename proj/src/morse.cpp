#include "jetbound/morse.hpp"

#include <charconv>
#include <numeric>

#include "jetbound/errors.hpp"

namespace jetbound {

bool is_admissible(std::span<const std::int64_t> a) {
  const std::size_t k = a.size();
  if (k == 0) return false;
  if (a[k - 1] <= 0) return false;
  if (k == 1) return true;
  if (a[k - 2] < 2 * a[k - 1]) return false;
  for (std::size_t j = 0; j + 2 < k; ++j)
    if (a[j] < 3 * a[j + 1]) return false;
  return true;
}

WeightVector::WeightVector(std::vector<std::int64_t> a) : a_(std::move(a)) {
  if (a_.empty() || a_.size() > static_cast<std::size_t>(kMaxOrder))
    throw InputError("weight vector must have between 1 and " + std::to_string(kMaxOrder) + " entries");
  if (!is_admissible(a_)) throw InputError("weights (" + to_string() + ") are not admissible");
}

std::vector<std::int64_t> WeightVector::partial_sums() const {
  std::vector<std::int64_t> b(a_.size());
  std::partial_sum(a_.begin(), a_.end(), b.begin());
  return b;
}

std::int64_t WeightVector::total() const { return std::accumulate(a_.begin(), a_.end(), std::int64_t{0}); }

WeightVector WeightVector::scaled(std::int64_t factor) const {
  std::vector<std::int64_t> out = a_;
  for (auto& x : out) x *= factor;
  return WeightVector(std::move(out));
}

std::string WeightVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(a_[i]);
  }
  return out;
}

WeightVector WeightVector::parse(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const auto item = text.substr(pos, comma - pos);
    std::int64_t value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || end != item.data() + item.size() || item.empty())
      throw InputError("bad weight list '" + std::string(text) + "'");
    out.push_back(value);
    pos = comma + 1;
  }
  return WeightVector(std::move(out));
}

WeightVector default_weights(int k) {
  if (k < 1 || k > kMaxOrder) throw InputError("jet order out of range: " + std::to_string(k));
  std::vector<std::int64_t> a(static_cast<std::size_t>(k));
  a[k - 1] = 1;
  for (int j = k - 1; j >= 1; --j) {
    std::int64_t w = 2;
    for (int e = 0; e < k - j - 1; ++e) w *= 3;
    a[j - 1] = w;
  }
  return WeightVector(std::move(a));
}

namespace {

void check_shape(const TowerContext& ctx, const WeightVector& a, const GeometrySpec& spec) {
  if (a.size() != static_cast<std::size_t>(ctx.order()))
    throw InputError("expected " + std::to_string(ctx.order()) + " weights, got " + std::to_string(a.size()));
  if (spec.n != ctx.n()) throw InputError("geometry dimension does not match the tower");
}

Polynomial weighted_tautological(const TowerContext& ctx, const WeightVector& a) {
  Polynomial out;
  for (int j = 1; j <= ctx.order(); ++j) out += Polynomial::variable(ctx.u(j)) * Integer(a[j - 1]);
  return out;
}

// x^e with a reduction after every multiplication.
Polynomial reduced_power(const Polynomial& x, unsigned e, const RelationSet& rels, const ReduceOptions& opts) {
  Polynomial acc = reduce_tower(1, rels, opts);
  for (unsigned i = 0; i < e; ++i) acc = reduced_product(acc, x, rels, opts);
  return acc;
}

ReduceOptions base_cap(const TowerContext& ctx) { return ReduceOptions{static_cast<unsigned>(ctx.n())}; }

}  // namespace

Polynomial twist_class(const WeightVector& a) {
  return Polynomial::variable(VariableId::h()) * Integer(2 * a.total());
}

Polynomial twisted_class(const TowerContext& ctx, const WeightVector& a) {
  if (a.size() != static_cast<std::size_t>(ctx.order()))
    throw InputError("expected " + std::to_string(ctx.order()) + " weights, got " + std::to_string(a.size()));
  return weighted_tautological(ctx, a) + twist_class(a);
}

Polynomial morse_class(const TowerContext& ctx, const WeightVector& a) {
  const Polynomial f = twisted_class(ctx, a);
  const Polynomial g = twist_class(a);
  const auto big_n = static_cast<unsigned>(ctx.total_dim());
  return (f - g * Integer(big_n)) * pow(f, big_n - 1);
}

EvaluatedClass morse_polynomial(const RelationSet& rels, const WeightVector& a, const GeometrySpec& spec) {
  const TowerContext& ctx = rels.context();
  check_shape(ctx, a, spec);
  const Polynomial f = twisted_class(ctx, a);
  const Polynomial g = twist_class(a);
  const auto big_n = static_cast<unsigned>(ctx.total_dim());
  const ReduceOptions opts = base_cap(ctx);
  const Polynomial power = reduced_power(f, big_n - 1, rels, opts);
  const Polynomial reduced = reduced_product(power, f - g * Integer(big_n), rels, opts);
  return evaluate_in_degree(integrate_fibers(reduced, ctx), spec);
}

EvaluatedClass morse_polynomial(int n, int k, const WeightVector& a, const GeometrySpec& spec) {
  return morse_polynomial(build_relations(TowerContext(n, k)), a, spec);
}

EvaluatedClass morse_polynomial_expanded(const RelationSet& rels, const WeightVector& a, const GeometrySpec& spec) {
  const TowerContext& ctx = rels.context();
  check_shape(ctx, a, spec);
  return evaluate_in_degree(integrate_fibers(reduce_tower(morse_class(ctx, a), rels), ctx), spec);
}

Integer leading_degree_coefficient(const RelationSet& rels, const WeightVector& a, const GeometrySpec& spec) {
  const TowerContext& ctx = rels.context();
  check_shape(ctx, a, spec);
  const auto big_n = static_cast<unsigned>(ctx.total_dim());
  const Polynomial top = reduced_power(weighted_tautological(ctx, a), big_n, rels, base_cap(ctx));
  return evaluate_in_degree(integrate_fibers(top, ctx), spec).coefficient(static_cast<unsigned>(ctx.n() + 1));
}

Integer leading_degree_coefficient(int n, int k, const WeightVector& a, const GeometrySpec& spec) {
  return leading_degree_coefficient(build_relations(TowerContext(n, k)), a, spec);
}

Polynomial symbolic_leading_coefficient(const RelationSet& rels, const GeometrySpec& spec) {
  const TowerContext& ctx = rels.context();
  if (spec.n != ctx.n()) throw InputError("geometry dimension does not match the tower");
  Polynomial o;
  for (int j = 1; j <= ctx.order(); ++j) o += Polynomial::variable(VariableId::a(j)) * Polynomial::variable(ctx.u(j));
  const auto big_n = static_cast<unsigned>(ctx.total_dim());
  const Polynomial top = reduced_power(o, big_n, rels, base_cap(ctx));
  const Polynomial in_d = evaluate_with_weights(integrate_fibers(top, ctx), spec);
  return coeff_of(in_d, VariableId::d(), static_cast<unsigned>(ctx.n() + 1));
}

MorseReport compute_report(int n, int k, const WeightVector& a, GeometryKind geometry) {
  const auto start = std::chrono::steady_clock::now();
  const TowerContext ctx(n, k);
  const GeometrySpec spec{geometry, n};
  MorseReport report;
  report.n = n;
  report.k = k;
  report.geometry = geometry;
  report.weights = a;
  report.total_dim = ctx.total_dim();
  report.morse_poly = morse_polynomial(build_relations(ctx), a, spec);
  report.leading_coeff = report.morse_poly.leading_coefficient();
  report.threshold = degree_threshold(report.morse_poly);
  if (report.threshold.has_value() != (report.leading_coeff > 0))
    throw InvariantError("threshold presence disagrees with the leading coefficient");
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace jetbound
