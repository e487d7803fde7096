#include "jetbound/geometry.hpp"

#include "jetbound/errors.hpp"

namespace jetbound {

namespace {

Integer binomial(unsigned long top, unsigned long bottom) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), top, bottom);
  return out;
}

Polynomial d_power(unsigned e) { return Polynomial::variable(VariableId::d(), e); }

void check_base_class(const Polynomial& cls, int n, bool allow_weights) {
  GradedTruncation grading;
  for (int l = 1; l <= kMaxRank; ++l) grading.weights[VariableId::c(l).index] = static_cast<std::uint8_t>(l);
  grading.weights[VariableId::h().index] = 1;
  for (const auto& [m, c] : cls.terms()) {
    for (const auto& [v, e] : m.factors()) {
      if (v.is_u()) throw InputError("class still contains tower variable " + v.name());
      if (v.is_a() && !allow_weights) throw InputError("class contains weight variable " + v.name());
      if (v.is_c() && v.subscript() > n) throw InputError("class uses " + v.name() + " beyond the base dimension");
    }
    if (m.weighted_degree(grading.weights) != static_cast<unsigned>(n))
      throw InputError("class is not of pure degree " + std::to_string(n) + " on the base");
  }
}

Polynomial substitute_chern(const Polynomial& cls, const GeometrySpec& spec) {
  Polynomial out = cls;
  for (int j = 1; j <= spec.n; ++j) out = substitute(out, VariableId::c(j), base_chern(spec, j));
  return eval_at_integer(out, VariableId::h(), 1) * Polynomial::variable(VariableId::d());
}

}  // namespace

std::string_view to_string(GeometryKind kind) {
  switch (kind) {
    case GeometryKind::compact_hypersurface: return "compact";
    case GeometryKind::logarithmic_pair: return "log";
  }
  return "?";
}

std::optional<GeometryKind> parse_geometry(std::string_view text) {
  if (text == "compact") return GeometryKind::compact_hypersurface;
  if (text == "log") return GeometryKind::logarithmic_pair;
  return std::nullopt;
}

Polynomial base_chern(const GeometrySpec& spec, int j) {
  if (spec.n < 1) throw InputError("base dimension must be positive");
  if (j < 1 || j > spec.n) throw InputError("Chern class index out of range: " + std::to_string(j));
  const auto uj = static_cast<unsigned>(j);
  Polynomial coeff;
  switch (spec.kind) {
    case GeometryKind::compact_hypersurface:
      // h^j coefficient of (1 + h)^{n+2} / (1 + d h)
      for (unsigned i = 0; i <= uj; ++i) {
        Integer term = binomial(static_cast<unsigned long>(spec.n) + 2, i);
        if ((uj - i) % 2 == 1) term = -term;
        coeff += d_power(uj - i) * term;
      }
      break;
    case GeometryKind::logarithmic_pair:
      for (unsigned i = 0; i <= uj; ++i) {
        Integer term = binomial(static_cast<unsigned long>(spec.n) + 1, i);
        if ((i + uj) % 2 == 1) term = -term;
        coeff += d_power(uj - i) * term;
      }
      break;
  }
  return coeff.shifted(Monomial::of(VariableId::h(), uj));
}

EvaluatedClass::EvaluatedClass(Polynomial poly_in_d) : poly_(std::move(poly_in_d)) {
  for (const auto& [m, c] : poly_.terms())
    for (const auto& [v, e] : m.factors())
      if (!v.is_d()) throw InputError("evaluated class must only involve d, found " + v.name());
}

Integer EvaluatedClass::coefficient(unsigned e) const { return poly_.coefficient(Monomial::of(VariableId::d(), e)); }

std::vector<Integer> EvaluatedClass::coefficients() const {
  const Degree deg = degree();
  if (!deg) return {};
  std::vector<Integer> out(*deg + 1);
  for (const auto& [m, c] : poly_.terms()) out[m.exponent(VariableId::d())] = c;
  return out;
}

Integer EvaluatedClass::leading_coefficient() const { return poly_.is_zero() ? Integer(0) : poly_.leading_term().second; }

Integer EvaluatedClass::operator()(const Integer& d) const {
  const Polynomial value = eval_at_integer(poly_, VariableId::d(), d);
  return value.is_zero() ? Integer(0) : value.leading_term().second;
}

EvaluatedClass evaluate_in_degree(const Polynomial& cls, const GeometrySpec& spec) {
  check_base_class(cls, spec.n, false);
  return EvaluatedClass(substitute_chern(cls, spec));
}

Polynomial evaluate_with_weights(const Polynomial& cls, const GeometrySpec& spec) {
  check_base_class(cls, spec.n, true);
  return substitute_chern(cls, spec);
}

}  // namespace jetbound
