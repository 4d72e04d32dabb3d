#include <doctest.h>

#include "gen.hpp"
#include "workbench/congruence.hpp"
#include "workbench/error.hpp"

using namespace workbench;

namespace {

Matrix rows(std::initializer_list<std::initializer_list<int>> r) {
  Matrix m(r.size(), r.begin()->size());
  std::size_t i = 0;
  for (const auto& row : r) {
    std::size_t j = 0;
    for (int v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("SL generators") {
  CHECK(sl_B(4, 2, 7) == rows({{1, 0, 0, 0}, {0, 8, 7, 0}, {0, -7, -6, 0}, {0, 0, 0, 1}}));
  CHECK(determinant(sl_N1(4)) == -1);
  CHECK(is_level(sl_N1(4), 2));
  for (long p : {2, 3, 5, 7})
    for (const auto& g : sl_generators(4, p)) {
      INFO(g.name);
      CHECK(is_level(g.matrix, g.name == "N1" ? 2 : p));
      CHECK(determinant(g.matrix) == (g.name == "N1" ? -1 : 1));
    }
  CHECK(is_level(Matrix::identity(3), 5));
  CHECK(is_level(sl_E(3, 1, 2, 3), 3));
  CHECK_FALSE(is_level(sl_E(3, 1, 2, 1), 2));
  CHECK_THROWS_AS(sl_E(3, 2, 2, 1), DomainError);
  CHECK_THROWS_AS(sl_B(3, 3, 1), DomainError);
}

TEST_CASE("Sp generators") {
  for (int g = 1; g <= 4; ++g) {
    const SymplecticContext ctx(g);
    CHECK(ctx.J.transpose() == ctx.J * Integer(-1));
    CHECK(ctx.J * ctx.J == Matrix::identity(2 * g) * Integer(-1));
    for (long p : {2, 3, 5}) {
      const auto gens = sp_generators(g, p);
      CHECK(gens.size() == static_cast<std::size_t>(2 * g * g + g));
      for (const auto& m : gens) {
        INFO(m.name);
        CHECK(is_symplectic(m.matrix, ctx));
        CHECK(is_level(m.matrix, p));
        CHECK(in_sp_lie(congruence_log(m.matrix, p), ctx, p));
      }
    }
  }
  const SymplecticContext ctx(2);
  CHECK(is_symplectic(Matrix::identity(4), ctx));
  CHECK(is_symplectic(gen_sp(SpKind::X, 2, 1, 1, 3), ctx));
  CHECK_FALSE(is_symplectic(sl_E(4, 1, 3, 1) * sl_E(4, 1, 2, 1), ctx));
  CHECK_THROWS_AS(is_symplectic(Matrix::identity(3), ctx), DomainError);
  CHECK_THROWS_AS(gen_sp(SpKind::Z, 2, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(gen_sp(SpKind::W, 2, 2, 0, 1), DomainError);
}

TEST_CASE("congruence log") {
  const SymplecticContext ctx(2);
  CHECK(congruence_log(Matrix::identity(3), 5).is_zero());
  Matrix e12(3, 3);
  e12(0, 1) = 1;
  CHECK(congruence_log(sl_E(3, 1, 2, 5), 5) == e12);
  CHECK_THROWS_AS(congruence_log(sl_E(3, 1, 2, 1), 5), DomainError);
  CHECK(in_sp_lie(Matrix(4, 4), ctx, 3));
  Matrix bad(4, 4);
  bad(0, 1) = 1;
  CHECK_FALSE(in_sp_lie(bad, ctx, 3));

  gen::Rng rng(51);
  for (int t = 0; t < 100; ++t) {
    const long p = (t % 3 == 0) ? 2 : (t % 3 == 1) ? 3 : 5;
    const auto gens = sp_generators(2, p);
    const Matrix& a = gens[rng() % gens.size()].matrix;
    const Matrix& b = gens[rng() % gens.size()].matrix;
    CHECK(congruence_log(a * b, p) == (congruence_log(a, p) + congruence_log(b, p)).mod(p));
  }
}

TEST_CASE("level-p unimodular matrices have determinant one for p >= 3") {
  gen::Rng rng(52);
  for (int t = 0; t < 100; ++t) {
    const long p = t % 2 ? 3 : 5;
    const auto gens = sl_generators(3, p);
    Matrix m = Matrix::identity(3);
    for (int i = 0; i < 5; ++i) m = m * gens[rng() % gens.size()].matrix;
    if (!is_level(m, p)) continue;
    CHECK(determinant(m) == 1);
  }
}

TEST_CASE("Lie rank certificates") {
  CHECK(lie_rank_certificate(2, 2).rank == 10);
  CHECK(lie_rank_certificate(3, 3).rank == 21);
  for (int g = 2; g <= 4; ++g)
    for (long p : {2, 3, 5}) CHECK(lie_rank_certificate(g, p).pass());

  // without W and U the diagonal directions are missing
  std::vector<NamedMatrix> partial;
  for (const auto& m : sp_generators(3, 3))
    if (m.name[0] != 'W' && m.name[0] != 'U') partial.push_back(m);
  const LieRankResult r = lie_rank(partial, 3, 3);
  CHECK(r.rank < r.expected);
  CHECK_THROWS_AS(lie_rank_certificate(1, 2), DomainError);
  CHECK_THROWS_AS(lie_rank_certificate(2, 4), DomainError);
}

TEST_CASE("generator lifts") {
  for (int n = 3; n <= 5; ++n)
    for (long p : {2, 3, 5}) {
      const LiftReport rep = sl_lift_check(n, p);
      CHECK(rep.pass());
      CHECK(rep.records.size() == sl_generators(n, p).size() + 1);  // plus N1
    }
  CHECK(rank_mod_p({{1, 1}, {1, -1}}, 2) == 1);
  CHECK(rank_mod_p({{1, 1}, {1, -1}}, 3) == 2);
}
