#pragma once

// Smith normal form and the integer linear algebra built on it: solving
// A x = b over Z, integer kernels, and cokernel structure of presentation
// matrices (generators are rows, relators are columns).

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "workbench/matrix.hpp"

namespace workbench {

struct SnfResult {
  Matrix U;  // unimodular, rows x rows
  Matrix D;  // diagonal with d_1 | d_2 | ..., d_i >= 0
  Matrix V;  // unimodular, cols x cols
  std::size_t rank = 0;
};

/// U A V = D.
SnfResult snf(const Matrix& a);

/// Nonzero diagonal entries of the Smith form, in divisibility order.
std::vector<Integer> invariant_factors(const Matrix& a);

/// Integer solutions of A x = b, reusing one factorisation for many right-hand sides.
class IntegerSolver {
 public:
  explicit IntegerSolver(const Matrix& a);
  std::optional<std::vector<Integer>> solve(const std::vector<Integer>& b) const;
  bool in_image(const std::vector<Integer>& b) const { return solve(b).has_value(); }
  /// Basis of {x : A x = 0}, as columns.
  Matrix kernel() const;
  std::size_t rank() const { return f_.rank; }

 private:
  SnfResult f_;
};

/// Column-sparse integer matrix for large presentations.
class SparseMatrix {
 public:
  using Column = std::map<std::size_t, Integer>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}
  static SparseMatrix from_dense(const Matrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  const Column& column(std::size_t c) const { return columns_[c]; }
  void add(std::size_t r, std::size_t c, const Integer& v);
  void append_columns(const SparseMatrix& other);
  Matrix to_dense() const;

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;
};

/// Isomorphism type Z^free + sum Z/t_i of a finitely generated abelian group.
struct AbelianStructure {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, divisibility order

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  /// `0`, `Z^2`, `Z/2 + Z^3`, ...
  std::string to_string() const;
  friend bool operator==(const AbelianStructure&, const AbelianStructure&) = default;
};

/// Structure of Z^rows / (column span). Unit pivots are eliminated sparsely
/// (smallest fill first) and the remainder goes through dense SNF.
AbelianStructure cokernel_structure(const SparseMatrix& relations);
AbelianStructure cokernel_structure(const Matrix& relations);

}  // namespace workbench
