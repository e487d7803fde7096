#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "jetbound/polynomial.hpp"

namespace jetbound {

enum class GeometryKind {
  compact_hypersurface,  // X^n in P^{n+1} of degree d, V = T_X
  logarithmic_pair,      // (P^n, D) with D smooth of degree d, V = T<D>
};

std::string_view to_string(GeometryKind kind);      // "compact" / "log"
std::optional<GeometryKind> parse_geometry(std::string_view text);

struct GeometrySpec {
  GeometryKind kind = GeometryKind::logarithmic_pair;
  int n = 2;

  friend bool operator==(const GeometrySpec&, const GeometrySpec&) = default;
};

// c_j of the base bundle as h^j times an integer polynomial in d.
//   compact:     c(T_X) (1 + d h) = (1 + h)^{n+2}
//   logarithmic: c_j = (-1)^j h^j sum_{i<=j} (-1)^i C(n+1, i) d^{j-i}
Polynomial base_chern(const GeometrySpec& spec, int j);

// Univariate polynomial in d.
class EvaluatedClass {
 public:
  EvaluatedClass() = default;
  explicit EvaluatedClass(Polynomial poly_in_d);

  const Polynomial& poly() const { return poly_; }
  Degree degree() const { return degree_in(poly_, VariableId::d()); }
  Integer coefficient(unsigned e) const;
  // Ascending in d; empty for zero.
  std::vector<Integer> coefficients() const;
  // Coefficient of the highest power of d, 0 for the zero class.
  Integer leading_coefficient() const;
  Integer operator()(const Integer& d) const;

  friend bool operator==(const EvaluatedClass&, const EvaluatedClass&) = default;

 private:
  Polynomial poly_;
};

// Replaces c_j by base_chern(spec, j), sets h = 1 and multiplies by d (the
// reference normalization, which is the correct h^n = d for hypersurfaces and
// a harmless positive factor for log pairs). The input must be homogeneous of
// degree n in h and the c_j and free of tower/weight variables.
EvaluatedClass evaluate_in_degree(const Polynomial& cls, const GeometrySpec& spec);

// Same substitution but tolerates symbolic weight variables a_j; the result is
// a polynomial in d and the a_j.
Polynomial evaluate_with_weights(const Polynomial& cls, const GeometrySpec& spec);

}  // namespace jetbound
