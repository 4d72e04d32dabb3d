#include <doctest.h>

#include "gen.hpp"
#include "workbench/snf.hpp"

using namespace workbench;

namespace {

bool is_diagonal_chain(const SnfResult& f) {
  const Matrix& d = f.D;
  Integer prev = 1;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (r != c && d(r, c) != 0) return false;
      if (r == c && r < f.rank) {
        if (d(r, c) <= 0 || d(r, c) % prev != 0) return false;
        prev = d(r, c);
      }
      if (r == c && r >= f.rank && d(r, c) != 0) return false;
    }
  return true;
}

bool unimodular(const Matrix& m) {
  const Integer det = determinant(m);
  return det == 1 || det == -1;
}

}  // namespace

TEST_CASE("Smith form of small matrices") {
  CHECK(invariant_factors(Matrix{{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
  CHECK(invariant_factors(Matrix{{2, 4}, {6, 8}}) == std::vector<Integer>{2, 4});
  CHECK(invariant_factors(Matrix(3, 2)).empty());
  CHECK(invariant_factors(Matrix::identity(4)) == std::vector<Integer>(4, 1));
  CHECK(invariant_factors(Matrix(0, 3)).empty());
  CHECK(snf(Matrix(2, 0)).rank == 0);
}

TEST_CASE("U A V = D with unimodular U, V and a divisibility chain") {
  gen::Rng rng(61);
  for (int t = 0; t < 120; ++t) {
    const std::size_t rows = gen::uniform(rng, 1, t < 100 ? 8 : 40);
    const std::size_t cols = gen::uniform(rng, 1, t < 100 ? 8 : 40);
    const Matrix a = gen::matrix(rng, rows, cols, 6, gen::uniform(rng, 0, 80));
    const SnfResult f = snf(a);
    CHECK(f.U * a * f.V == f.D);
    CHECK(unimodular(f.U));
    CHECK(unimodular(f.V));
    CHECK(is_diagonal_chain(f));
  }
}

TEST_CASE("integer solver and kernel") {
  const IntegerSolver s(Matrix{{2, 0}, {0, 3}});
  CHECK(s.solve({4, 9}) == std::vector<Integer>{2, 3});
  CHECK_FALSE(s.in_image({1, 0}));

  gen::Rng rng(62);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = gen::uniform(rng, 1, 6), cols = gen::uniform(rng, 1, 6);
    const Matrix a = gen::matrix(rng, rows, cols, 5, 30);
    const IntegerSolver solver(a);
    std::vector<Integer> x(cols);
    for (auto& v : x) v = gen::uniform(rng, -4, 4);
    const auto b = a * x;
    const auto sol = solver.solve(b);
    REQUIRE(sol.has_value());
    CHECK(a * *sol == b);

    const Matrix k = solver.kernel();
    CHECK(k.cols() == cols - solver.rank());
    CHECK((a * k).is_zero());
  }
}

TEST_CASE("cokernel structures") {
  CHECK(cokernel_structure(Matrix{{2, 0}, {0, 3}}).to_string() == "Z/6");
  CHECK(cokernel_structure(Matrix(3, 0)).to_string() == "Z^3");
  CHECK(cokernel_structure(Matrix(0, 0)).is_zero());
  CHECK(cokernel_structure(Matrix{{2}, {0}, {0}}).to_string() == "Z/2 + Z^2");
  CHECK(cokernel_structure(Matrix{{1, 0}, {-1, 0}}).to_string() == "Z");

  gen::Rng rng(63);
  for (int t = 0; t < 150; ++t) {
    const std::size_t rows = gen::uniform(rng, 1, 12), cols = gen::uniform(rng, 0, 12);
    const Matrix a = gen::matrix(rng, rows, cols, 3, 70);
    const SparseMatrix sparse = SparseMatrix::from_dense(a);
    CHECK(sparse.to_dense() == a);
    const AbelianStructure dense = cokernel_structure(a);
    CHECK(cokernel_structure(sparse) == dense);
    std::size_t nonunit = 0;
    for (const auto& d : invariant_factors(a)) nonunit += d != 1;
    CHECK(dense.torsion.size() == nonunit);
    CHECK(dense.free_rank == rows - invariant_factors(a).size());
  }
}
