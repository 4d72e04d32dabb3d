#include <doctest.h>

#include "gen.hpp"
#include "workbench/error.hpp"
#include "workbench/freelie.hpp"
#include "workbench/snf.hpp"
#include "workbench/suites.hpp"

using namespace workbench;

namespace {

LieElement e(const BasisContext& ctx, int i) { return LieElement::basis(ctx, i); }

HomTensor tensor(const BasisContext& ctx, int degree, std::initializer_list<std::pair<IndexWord, int>> terms) {
  HomTensor t(ctx, degree);
  for (const auto& [m, c] : terms) t.add_term(m, c);
  return t;
}

}  // namespace

TEST_CASE("Lyndon bases on small ranks") {
  const auto b22 = lyndon_basis(BasisContext(2), 2);
  REQUIRE(b22.size() == 1);
  CHECK(b22[0].bracketing == "[1,2]");
  const auto b23 = lyndon_basis(BasisContext(2), 3);
  REQUIRE(b23.size() == 2);
  CHECK(b23[0].bracketing == "[1,[1,2]]");
  CHECK(b23[1].bracketing == "[[1,2],2]");
  CHECK(lyndon_basis(BasisContext(3), 1).size() == 3);
  CHECK(is_lyndon({1, 1, 2}));
  CHECK_FALSE(is_lyndon({1, 2, 1}));
  CHECK_FALSE(is_lyndon({1, 1}));
  CHECK(standard_factorization({1, 1, 2, 1, 2}) == std::pair<IndexWord, IndexWord>{{1, 1, 2}, {1, 2}});
}

TEST_CASE("Lyndon counts follow the necklace formula") {
  CHECK(necklace_count(2, 6) == 9);
  CHECK(necklace_count(3, 4) == 18);
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 8; ++k) CHECK(static_cast<std::int64_t>(lyndon_words(n, k).size()) == necklace_count(n, k));
}

TEST_CASE("PBW images of the Lyndon basis are independent") {
  Report r;
  check_witt(r, 3, 6);
  CHECK(r.checks().size() == 18);
  CHECK(r.pass());
}

TEST_CASE("PBW embedding and projection") {
  const BasisContext ctx(3);
  CHECK(pbw_embed(bracket(e(ctx, 1), e(ctx, 2))) == tensor(ctx, 2, {{{1, 2}, 1}, {{2, 1}, -1}}));
  CHECK(pbw_embed(LieElement(ctx, 3)).is_zero());
  CHECK(lie_project(tensor(ctx, 2, {{{1, 2}, 1}, {{2, 1}, -1}})) == bracket(e(ctx, 1), e(ctx, 2)));
  CHECK_THROWS_AS(lie_project(tensor(ctx, 2, {{{1, 2}, 1}, {{2, 1}, 1}})), NotLieElement);

  gen::Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    const LieElement x = gen::lie(rng, ctx, gen::uniform(rng, 1, 5), 3);
    CHECK(lie_project(pbw_embed(x)) == x);
  }
}

TEST_CASE("left-normed brackets") {
  const BasisContext ctx(6);
  CHECK(left_normed(ctx, {1, 2}) == bracket(e(ctx, 1), e(ctx, 2)));
  CHECK(left_normed(ctx, {1, 2, 3}) == bracket(bracket(e(ctx, 1), e(ctx, 2)), e(ctx, 3)));
  for (int k = 1; k <= 6; ++k) {
    IndexWord idx;
    for (int i = 1; i <= k; ++i) idx.push_back(i);
    const HomTensor t = pbw_embed(left_normed(ctx, idx));
    CHECK(t.size() == (std::size_t{1} << (k - 1)));
    for (const auto& [m, c] : t.terms()) CHECK(abs(c) == 1);
    // [lambda_k, a_{k+1}]: only the identity permutation starts with a_1
    IndexWord longer = idx;
    longer.push_back(k + 1 <= 6 ? k + 1 : 1);
    if (k + 1 > 6) continue;
    int starting_with_one = 0;
    const HomTensor expanded = pbw_embed(left_normed(ctx, longer));
    for (const auto& [m, c] : expanded.terms())
      if (m[0] == 1) {
        ++starting_with_one;
        CHECK(m == longer);
      }
    CHECK(starting_with_one == 1);
  }
}

TEST_CASE("bracket axioms") {
  const BasisContext ctx(3);
  const LieElement x = bracket(e(ctx, 1), e(ctx, 2));
  CHECK(bracket(x, x).is_zero());
  gen::Rng rng(32);
  for (int t = 0; t < 60; ++t) {
    const LieElement a = gen::lie(rng, ctx, gen::uniform(rng, 1, 2));
    const LieElement b = gen::lie(rng, ctx, gen::uniform(rng, 1, 2));
    const LieElement c = gen::lie(rng, ctx, gen::uniform(rng, 1, 2));
    CHECK(bracket(a, b) == -bracket(b, a));
    const LieElement jacobi = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
    CHECK(jacobi.is_zero());
  }
}

TEST_CASE("rho truncation") {
  const BasisContext ctx(4);
  const WedgeTensor r1 = rho_truncate(bracket(e(ctx, 1), e(ctx, 2)));
  WedgeTensor expected(ctx, 1);
  expected.add_term(1, {2}, 1);
  expected.add_term(2, {1}, -1);
  CHECK(r1 == expected);
  CHECK_THROWS_AS(rho_truncate(e(ctx, 1)), DomainError);

  // linearity: rho([[e1,e2],e1]) from the pieces
  const LieElement x = left_normed(ctx, {1, 2, 1});
  WedgeTensor pieces = rho_truncate(left_normed(ctx, {1, 2, 1}) * Integer(2));
  WedgeTensor doubled = rho_truncate(x);
  doubled += rho_truncate(x);
  CHECK(pieces == doubled);

  for (int k = 1; k <= 3; ++k) {
    IndexWord idx, tail;
    for (int i = 1; i <= k + 1; ++i) idx.push_back(i);
    for (int i = 2; i <= k + 1; ++i) tail.push_back(i);
    const ExteriorVector c = rho_truncate(left_normed(ctx, idx)).contract_first(1);
    CHECK(c == ExteriorVector::wedge(ctx, tail));
  }
}

TEST_CASE("wedge normalisation") {
  const BasisContext ctx(4);
  CHECK(ExteriorVector::wedge(ctx, {2, 1}).terms().at({1, 2}) == -1);
  CHECK(ExteriorVector::wedge(ctx, {1, 3, 1}).is_zero());
  WedgeTensor t(ctx, 2);
  t.add_term(1, {3, 2}, 1);
  t.add_term(1, {2, 3}, 1);
  CHECK(t.is_zero());
  t.add_term(4, {3, 1}, 2);
  CHECK(t.to_string() == "-2 * e4 ^ e1∧e3");
}

TEST_CASE("derivations") {
  const BasisContext ctx(3);
  const GradedDerivation ad1 = inner_derivation(e(ctx, 1));
  CHECK(ad1.image(2) == bracket(e(ctx, 1), e(ctx, 2)));
  CHECK(ad1.image(1).is_zero());
  CHECK(inner_derivation(LieElement(ctx, 2)).is_zero());

  gen::Rng rng(33);
  for (int t = 0; t < 30; ++t) {
    const GradedDerivation d = gen::derivation(rng, ctx, gen::uniform(rng, 1, 2));
    CHECK(derivation_apply(d, e(ctx, 2)) == d.image(2));
    const LieElement u = gen::lie(rng, ctx, 1), v = gen::lie(rng, ctx, 2);
    CHECK(derivation_apply(d, bracket(u, v)) == bracket(derivation_apply(d, u), v) + bracket(u, derivation_apply(d, v)));
    CHECK(derivation_bracket(d, d).is_zero());

    const LieElement m1 = gen::lie(rng, ctx, gen::uniform(rng, 1, 2)), m2 = gen::lie(rng, ctx, gen::uniform(rng, 1, 2));
    CHECK(derivation_apply(inner_derivation(m1), m2) == bracket(m1, m2));
    CHECK(derivation_bracket(inner_derivation(m1), inner_derivation(m2)) == inner_derivation(bracket(m1, m2)));
  }
}

TEST_CASE("omega and point pushing") {
  const BasisContext g1 = BasisContext::symplectic_genus(1);
  CHECK(omega(g1) == bracket(e(g1, g1.a(1)), e(g1, g1.b(1))));
  const BasisContext g2 = BasisContext::symplectic_genus(2);
  CHECK(omega(g2) == bracket(e(g2, g2.a(1)), e(g2, g2.b(1))) + bracket(e(g2, g2.a(2)), e(g2, g2.b(2))));
  CHECK(pbw_embed(omega(g2)).size() == 4);
  CHECK_THROWS_AS(omega(BasisContext(2)), DomainError);

  const GradedDerivation p = pp1(e(g2, g2.a(1)));
  CHECK(p.image(g2.a(2)) == bracket(e(g2, g2.a(1)), e(g2, g2.a(2))));
  CHECK(p.image(g2.b(1)) == bracket(e(g2, g2.a(1)), e(g2, g2.b(1))) - omega(g2));
  CHECK(pp1(LieElement(g2, 1)).is_zero());
  CHECK_THROWS_AS(pp1(bracket(e(g2, 1), e(g2, 2))), DomainError);
}

TEST_CASE("PP on the isotropic span acts by brackets") {
  gen::Rng rng(34);
  for (int t = 0; t < 40; ++t) {
    const int g = gen::uniform(rng, 2, 3);
    const BasisContext ctx = BasisContext::symplectic_genus(g);
    auto iso = [&](int degree) {
      LieElement out(ctx, degree);
      IndexWord idx;
      for (int i = 0; i < degree; ++i) idx.push_back(ctx.a(gen::uniform(rng, 1, g)));
      return out + left_normed(ctx, idx);
    };
    const int d1 = gen::uniform(rng, 1, 3), d2 = gen::uniform(rng, 1, 4 - d1 + 1);
    const LieElement m1 = iso(d1), m2 = iso(d2);
    CHECK(derivation_apply(pp(m1), m2) == bracket(m1, m2));
  }
}

TEST_CASE("PP does not depend on the bracketing") {
  const BasisContext ctx = BasisContext::symplectic_genus(2);
  // [[a1,b1],a2] and its Jacobi rewrite [a1,[b1,a2]] - [b1,[a1,a2]]
  const BracketExpr lhs = BracketExpr::parse("[[1,3],2]");
  const BracketExpr t1 = BracketExpr::parse("[1,[3,2]]");
  const BracketExpr t2 = BracketExpr::parse("[3,[1,2]]");
  CHECK(evaluate(ctx, lhs) == evaluate(ctx, t1) - evaluate(ctx, t2));
  CHECK(pp(ctx, lhs) == pp(ctx, t1) - pp(ctx, t2));
  CHECK(pp(ctx, lhs) == pp(evaluate(ctx, lhs)));
  CHECK(BracketExpr::parse("[e1,[e2,e3]]").to_string() == "[1,[2,3]]");
}

TEST_CASE("text formats") {
  const BasisContext ctx(3);
  const LieElement x = left_normed(ctx, {1, 2, 3});
  CHECK(x.to_string() == "1 * [1,[2,3]]\n1 * [[1,3],2]");
  CHECK(LieElement::parse(ctx, x.to_string()) == x);
  CHECK(LieElement::parse(ctx, "2 * [1,2]\n-1 * [2,1]\n") == bracket(e(ctx, 1), e(ctx, 2)) * Integer(3));
  CHECK_THROWS_AS(LieElement::parse(ctx, "2 * [1,2\n"), ParseError);
}
