#include <random>
#include <vector>

#include <doctest.h>

#include "jetbound/errors.hpp"
#include "jetbound/tower.hpp"
#include "support.hpp"

using namespace jetbound;
using jetbound::testing::P;

TEST_CASE("tower context") {
  const TowerContext ctx(3, 2);
  CHECK(ctx.rank() == 3);
  CHECK(ctx.total_dim() == 7);
  CHECK(ctx.u(2) == VariableId::u(2));
  CHECK_THROWS_AS(TowerContext(0, 2), InputError);
  CHECK_THROWS_AS(TowerContext(2, 10), InputError);
  CHECK_THROWS_AS(ctx.u(3), InputError);
  CHECK_THROWS_AS(ctx.c(4), InputError);

  CHECK(homogeneous_degree(P("u1^2 + c1*u2 + c2 + h^2"), ctx) == 2u);
  CHECK_THROWS_AS(homogeneous_degree(P("u1^2 + c1"), ctx), InputError);
}

TEST_CASE("relations for n = 2") {
  const auto rels = build_relations(TowerContext(2, 2));
  CHECK(rels.relation(1) == P("u1^2 + c1*u1 + c2"));
  CHECK(rels.lifted_chern(1, 1) == P("c1 + u1"));
  CHECK(rels.lifted_chern(1, 2) == P("c2 - u1^2"));
  CHECK(rels.lifted_chern(1, 3).is_zero());
  CHECK(rels.relation(2) == P("u2^2 + c1*u2 + u1*u2 + c2 - u1^2"));
  CHECK(rels.lifted_chern(0, 2) == P("c2"));
}

TEST_CASE("relations are monic of degree r and homogeneous") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k) {
      const TowerContext ctx(n, k);
      const auto rels = build_relations(ctx);
      for (int j = 1; j <= k; ++j) {
        const auto& q = rels.relation(j);
        CHECK(degree_in(q, ctx.u(j)) == Degree{static_cast<unsigned>(n)});
        CHECK(coeff_of(q, ctx.u(j), static_cast<unsigned>(n)) == Polynomial(1));
        CHECK(homogeneous_degree(q, ctx) == static_cast<unsigned>(n));
        for (int l = 1; l <= n && j < k; ++l) CHECK(homogeneous_degree(rels.lifted_chern(j, l), ctx) == static_cast<unsigned>(l));
      }
    }
}

TEST_CASE("first lifted Chern class is c1 + (n-1) times the sum of u") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 5; ++k) {
      const auto rels = build_relations(TowerContext(n, k));
      Polynomial expected = P("c1");
      for (int j = 1; j < k; ++j) {
        expected += Polynomial::variable(VariableId::u(j)) * Integer(n - 1);
        CHECK(rels.lifted_chern(j, 1) == expected);
      }
    }
}

TEST_CASE("canonical relation text is stable") {
  const auto a = build_relations(TowerContext(3, 2)).canonical_text();
  CHECK(a == build_relations(TowerContext(3, 2)).canonical_text());
  CHECK(a != build_relations(TowerContext(3, 3)).canonical_text());
}

TEST_CASE("reduce_tower examples") {
  const auto rels = build_relations(TowerContext(2, 2));
  CHECK(reduce_tower(P("u2^2*u1"), rels) == P("c2*u2 + c1^2*u1 - 2*c2*u1 + c1*c2"));
  CHECK(reduce_tower(P("u2*u1"), rels) == P("u2*u1"));
  CHECK(reduce_tower(P("u1^2"), rels) == P("-c1*u1 - c2"));
  CHECK(reduce_tower(Polynomial{}, rels).is_zero());
}

TEST_CASE("reduce_tower invariants on random classes") {
  std::mt19937_64 rng(99);
  for (int n = 2; n <= 3; ++n) {
    const TowerContext ctx(n, 2);
    const auto rels = build_relations(ctx);
    const std::vector<VariableId> vars{ctx.u(1), ctx.u(2), ctx.c(1), ctx.c(2), ctx.h()};
    for (int i = 0; i < 40; ++i) {
      const auto p = testing::random_polynomial(rng, vars, 4, 4, 9);
      const auto s = testing::random_polynomial(rng, vars, 4, 3, 9);
      const auto rp = reduce_tower(p, rels);
      for (int j = 1; j <= 2; ++j) CHECK(degree_in(rp, ctx.u(j)) < Degree{static_cast<unsigned>(n)});
      CHECK(reduce_tower(rp, rels) == rp);
      for (int j = 1; j <= 2; ++j) CHECK(reduce_tower(rels.relation(j) * p + s, rels) == reduce_tower(s, rels));
      CHECK(reduced_product(p, s, rels) == reduce_tower(p * s, rels));
    }
  }
}

TEST_CASE("integrate_fibers") {
  const TowerContext ctx(2, 2);
  const auto rels = build_relations(ctx);
  CHECK(integrate_fibers(P("u2*u1"), ctx) == Polynomial(1));
  CHECK(integrate_fibers(P("c2*u2 + c1^2*u1 - 2*c2*u1 + c1*c2"), ctx).is_zero());
  CHECK(integrate_fibers(P("3*c1*u2*u1 + u2"), ctx) == P("3*c1"));
  CHECK_THROWS_AS(integrate_fibers(P("u2^2"), ctx), InputError);
  CHECK_THROWS_AS(integrate_fibers(P("u3"), ctx), InputError);
}

TEST_CASE("intersect examples") {
  {
    const auto rels = build_relations(TowerContext(2, 2));
    const std::vector<unsigned> e{2, 2};
    CHECK(intersect(rels, e) == P("c2"));
    const std::vector<unsigned> bad{2, 1};
    CHECK_THROWS_AS(intersect(rels, bad), InputError);
    const std::vector<unsigned> short_vec{4};
    CHECK_THROWS_AS(intersect(rels, short_vec), InputError);
  }
  {
    const auto rels = build_relations(TowerContext(2, 1));
    const std::vector<unsigned> e{3};
    CHECK(intersect(rels, e) == P("c1^2 - c2"));
  }
  {
    const auto rels = build_relations(TowerContext(3, 3));
    const std::vector<unsigned> e{3, 3, 3};
    CHECK(intersect(rels, e) == P("3*c1^3 - 8*c2*c1 + 4*c3"));
  }
}

TEST_CASE("base-degree cap does not change the pushforward") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 3; ++n) {
    const TowerContext ctx(n, 2);
    const auto rels = build_relations(ctx);
    const unsigned top = static_cast<unsigned>(ctx.total_dim());
    for (int i = 0; i < 20; ++i) {
      // Homogeneous class of degree N built from random monomials.
      Polynomial p;
      for (int t = 0; t < 4; ++t) {
        const unsigned e1 = static_cast<unsigned>(rng() % (top + 1));
        const unsigned e2 = static_cast<unsigned>(rng() % (top - e1 + 1));
        const unsigned rest = top - e1 - e2;
        const auto base = rest % 2 == 0 && n >= 2 && rng() % 2 ? Polynomial::variable(ctx.c(2), rest / 2)
                                                               : Polynomial::variable(ctx.h(), rest);
        p += Polynomial::variable(ctx.u(1), e1) * Polynomial::variable(ctx.u(2), e2) * base *
             Integer(static_cast<long>(rng() % 7) - 3);
      }
      const ReduceOptions capped{static_cast<unsigned>(n)};
      CHECK(integrate_fibers(reduce_tower(p, rels, capped), ctx) == integrate_fibers(reduce_tower(p, rels), ctx));
    }
  }
}
