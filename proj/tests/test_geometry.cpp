#include <vector>

#include <doctest.h>

#include "jetbound/errors.hpp"
#include "jetbound/geometry.hpp"
#include "support.hpp"

using namespace jetbound;
using jetbound::testing::P;

namespace {

const GeometrySpec compact2{GeometryKind::compact_hypersurface, 2};
const GeometrySpec log_pair2{GeometryKind::logarithmic_pair, 2};

// Total Chern class 1 + c_1 + ... + c_n in terms of h and d.
Polynomial total_chern(const GeometrySpec& spec) {
  Polynomial out = 1;
  for (int j = 1; j <= spec.n; ++j) out += base_chern(spec, j);
  return out;
}

Polynomial h_part_up_to(const Polynomial& p, unsigned top) {
  Polynomial out;
  for (unsigned e = 0; e <= top; ++e) out += coeff_of(p, VariableId::h(), e) * Polynomial::variable(VariableId::h(), e);
  return out;
}

}  // namespace

TEST_CASE("geometry names") {
  CHECK(to_string(GeometryKind::compact_hypersurface) == "compact");
  CHECK(to_string(GeometryKind::logarithmic_pair) == "log");
  CHECK(parse_geometry("log") == GeometryKind::logarithmic_pair);
  CHECK_FALSE(parse_geometry("projective"));
}

TEST_CASE("base Chern classes for n = 2") {
  CHECK(base_chern(compact2, 1) == P("4*h - d*h"));
  CHECK(base_chern(compact2, 2) == P("d^2*h^2 - 4*d*h^2 + 6*h^2"));
  CHECK(base_chern(log_pair2, 1) == P("3*h - d*h"));
  CHECK(base_chern(log_pair2, 2) == P("d^2*h^2 - 3*d*h^2 + 3*h^2"));
  CHECK_THROWS_AS(base_chern(compact2, 3), InputError);
  CHECK_THROWS_AS(base_chern(compact2, 0), InputError);
}

TEST_CASE("compact hypersurface: c(X) (1 + d h) = (1 + h)^(n+2) below degree n+1") {
  for (int n = 1; n <= 6; ++n) {
    const GeometrySpec spec{GeometryKind::compact_hypersurface, n};
    const auto lhs = total_chern(spec) * P("1 + d*h");
    const auto rhs = pow(P("1 + h"), static_cast<unsigned>(n + 2));
    CHECK(h_part_up_to(lhs, static_cast<unsigned>(n)) == h_part_up_to(rhs, static_cast<unsigned>(n)));
  }
}

TEST_CASE("log pair: c(T<D>) (1 + d h) = (1 + h)^(n+1) below degree n+1") {
  for (int n = 1; n <= 6; ++n) {
    const GeometrySpec spec{GeometryKind::logarithmic_pair, n};
    const auto lhs = total_chern(spec) * P("1 + d*h");
    const auto rhs = pow(P("1 + h"), static_cast<unsigned>(n + 1));
    CHECK(h_part_up_to(lhs, static_cast<unsigned>(n)) == h_part_up_to(rhs, static_cast<unsigned>(n)));
  }
}

TEST_CASE("evaluate_in_degree") {
  const auto c2 = evaluate_in_degree(P("c2"), compact2);
  CHECK(c2.coefficients() == std::vector<Integer>{0, 6, -4, 1});
  CHECK(c2.degree() == Degree{3});
  CHECK(c2.leading_coefficient() == 1);
  CHECK(c2(Integer(5)) == 5 * (25 - 20 + 6));

  CHECK(evaluate_in_degree(P("c1^2 - c2"), compact2).coefficients() == std::vector<Integer>{0, 10, -4});
  CHECK(evaluate_in_degree(P("h^2"), log_pair2).coefficients() == std::vector<Integer>{0, 1});
  CHECK(evaluate_in_degree(Polynomial{}, log_pair2).coefficients().empty());

  CHECK_THROWS_AS(evaluate_in_degree(P("u1*c1"), compact2), InputError);
  CHECK_THROWS_AS(evaluate_in_degree(P("c3"), compact2), InputError);
  CHECK_THROWS_AS(evaluate_in_degree(P("c1"), compact2), InputError);
  CHECK_THROWS_AS(evaluate_in_degree(P("a1*c2"), compact2), InputError);
  CHECK(evaluate_with_weights(P("a1*c2"), compact2) == P("a1*d^3 - 4*a1*d^2 + 6*a1*d"));
}

TEST_CASE("evaluated class") {
  const EvaluatedClass p(P("2*d^2 - 3"));
  CHECK(p.coefficient(2) == 2);
  CHECK(p.coefficient(1) == 0);
  CHECK(p.coefficient(7) == 0);
  CHECK(p(Integer(-2)) == 5);
  CHECK_THROWS_AS(EvaluatedClass(P("d*h")), InputError);
  CHECK(EvaluatedClass{}.degree() == kMinusInfinity);
}
