#include "workbench/snf.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "workbench/error.hpp"

namespace workbench {

namespace {

// Elementary operations applied simultaneously to D and its transform.
struct SnfWork {
  Matrix D, U, V;
  bool transforms;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < D.cols(); ++c) std::swap(D(a, c), D(b, c));
    if (transforms)
      for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(a, c), U(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < D.rows(); ++r) std::swap(D(r, a), D(r, b));
    if (transforms)
      for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, a), V(r, b));
  }
  // row_dst -= q * row_src
  void row_axpy(std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
    for (std::size_t c = from; c < D.cols(); ++c)
      if (D(src, c) != 0) D(dst, c) -= q * D(src, c);
    if (transforms)
      for (std::size_t c = 0; c < U.cols(); ++c)
        if (U(src, c) != 0) U(dst, c) -= q * U(src, c);
  }
  void col_axpy(std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
    for (std::size_t r = from; r < D.rows(); ++r)
      if (D(r, src) != 0) D(r, dst) -= q * D(r, src);
    if (transforms)
      for (std::size_t r = 0; r < V.rows(); ++r)
        if (V(r, src) != 0) V(r, dst) -= q * V(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < D.cols(); ++c) D(r, c) = -D(r, c);
    if (transforms)
      for (std::size_t c = 0; c < U.cols(); ++c) U(r, c) = -U(r, c);
  }
};

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

SnfResult run_snf(const Matrix& a, bool transforms) {
  const std::size_t m = a.rows(), n = a.cols();
  SnfWork w{a, transforms ? Matrix::identity(m) : Matrix(), transforms ? Matrix::identity(n) : Matrix(), transforms};
  std::size_t t = 0;
  while (t < std::min(m, n)) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pr = m, pc = n;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < n; ++c)
        if (w.D(r, c) != 0 && (pr == m || abs(w.D(r, c)) < abs(w.D(pr, pc)))) {
          pr = r;
          pc = c;
        }
    if (pr == m) break;
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);
    for (;;) {
      bool clean = true;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (w.D(r, t) == 0) continue;
        w.row_axpy(r, t, floor_div(w.D(r, t), w.D(t, t)), t);
        if (w.D(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (w.D(t, c) == 0) continue;
        w.col_axpy(c, t, floor_div(w.D(t, c), w.D(t, t)), t);
        if (w.D(t, c) != 0) clean = false;
      }
      if (!clean) {
        // a smaller remainder sits in row t or column t; move it to the pivot
        std::size_t br = t, bc = t;
        for (std::size_t r = t + 1; r < m; ++r)
          if (w.D(r, t) != 0 && abs(w.D(r, t)) < abs(w.D(br, bc))) {
            br = r;
            bc = t;
          }
        for (std::size_t c = t + 1; c < n; ++c)
          if (w.D(t, c) != 0 && abs(w.D(t, c)) < abs(w.D(br, bc))) {
            br = t;
            bc = c;
          }
        w.swap_rows(t, br);
        w.swap_cols(t, bc);
        continue;
      }
      // divisibility: fold in a row whose entries the pivot does not divide
      std::size_t bad = m;
      for (std::size_t r = t + 1; r < m && bad == m; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (w.D(r, c) % w.D(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad == m) break;
      w.row_axpy(t, bad, Integer(-1), t);
    }
    if (w.D(t, t) < 0) w.negate_row(t);
    ++t;
  }
  SnfResult out;
  out.rank = t;
  out.D = std::move(w.D);
  out.U = std::move(w.U);
  out.V = std::move(w.V);
  return out;
}

}  // namespace

SnfResult snf(const Matrix& a) { return run_snf(a, true); }

std::vector<Integer> invariant_factors(const Matrix& a) {
  const SnfResult r = run_snf(a, false);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < r.rank; ++i) out.push_back(r.D(i, i));
  return out;
}

// --- IntegerSolver ------------------------------------------------------------

IntegerSolver::IntegerSolver(const Matrix& a) : f_(snf(a)) {}

std::optional<std::vector<Integer>> IntegerSolver::solve(const std::vector<Integer>& b) const {
  if (b.size() != f_.U.rows()) throw DomainError("right-hand side has the wrong length");
  const std::vector<Integer> y = f_.U * b;
  std::vector<Integer> z(f_.V.rows());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < f_.rank) {
      const Integer& d = f_.D(i, i);
      if (y[i] % d != 0) return std::nullopt;
      z[i] = y[i] / d;
    } else if (y[i] != 0) {
      return std::nullopt;
    }
  }
  return f_.V * z;
}

Matrix IntegerSolver::kernel() const {
  const std::size_t n = f_.V.cols();
  return f_.V.column_block(f_.rank, n - f_.rank);
}

// --- sparse presentations -------------------------------------------------------

SparseMatrix SparseMatrix::from_dense(const Matrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) s.columns_[c].emplace(r, m(r, c));
  return s;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Integer& v) {
  if (r >= rows_ || c >= columns_.size()) throw DomainError("sparse entry out of range");
  if (v == 0) return;
  auto [it, inserted] = columns_[c].try_emplace(r, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) columns_[c].erase(it);
  }
}

void SparseMatrix::append_columns(const SparseMatrix& other) {
  if (other.rows_ != rows_) throw DomainError("append_columns: row count mismatch");
  columns_.insert(columns_.end(), other.columns_.begin(), other.columns_.end());
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, columns_.size());
  for (std::size_t c = 0; c < columns_.size(); ++c)
    for (const auto& [r, v] : columns_[c]) m(r, c) = v;
  return m;
}

std::string AbelianStructure::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  if (free_rank > 0) {
    if (!out.empty()) out += " + ";
    out += free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  }
  return out;
}

AbelianStructure cokernel_structure(const SparseMatrix& relations) {
  const std::size_t m = relations.rows(), n = relations.cols();
  std::vector<SparseMatrix::Column> cols(n);
  std::vector<std::set<std::size_t>> rows(m);
  for (std::size_t c = 0; c < n; ++c) {
    cols[c] = relations.column(c);
    for (const auto& [r, v] : cols[c]) rows[r].insert(c);
  }
  std::vector<bool> row_alive(m, true), col_alive(n, true);

  for (;;) {
    std::size_t best_r = m, best_c = n, best_cost = SIZE_MAX;
    for (std::size_t c = 0; c < n && best_cost > 0; ++c) {
      if (!col_alive[c]) continue;
      if (cols[c].empty()) {
        col_alive[c] = false;
        continue;
      }
      const std::size_t csize = cols[c].size() - 1;
      for (const auto& [r, v] : cols[c]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = csize * (rows[r].size() - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_r = r;
          best_c = c;
          if (cost == 0) break;
        }
      }
    }
    if (best_c == n) break;

    const std::size_t pr = best_r, pc = best_c;
    const Integer u = cols[pc].at(pr);  // +-1, its own inverse
    const std::vector<std::size_t> others(rows[pr].begin(), rows[pr].end());
    for (std::size_t c2 : others) {
      if (c2 == pc) continue;
      const Integer f = cols[c2].at(pr) * u;
      auto& target = cols[c2];
      for (const auto& [r, v] : cols[pc]) {
        auto [it, inserted] = target.try_emplace(r, -f * v);
        if (inserted) {
          rows[r].insert(c2);
          continue;
        }
        it->second -= f * v;
        if (it->second == 0) {
          target.erase(it);
          rows[r].erase(c2);
        }
      }
    }
    for (const auto& [r, v] : cols[pc]) rows[r].erase(pc);
    cols[pc].clear();
    col_alive[pc] = false;
    row_alive[pr] = false;
  }

  AbelianStructure out;
  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < m; ++r) {
    if (!row_alive[r]) continue;
    if (rows[r].empty())
      ++out.free_rank;
    else
      live_rows.push_back(r);
  }
  for (std::size_t c = 0; c < n; ++c)
    if (col_alive[c] && !cols[c].empty()) live_cols.push_back(c);
  if (live_rows.empty()) return out;

  std::vector<std::size_t> row_pos(m, SIZE_MAX);
  for (std::size_t i = 0; i < live_rows.size(); ++i) row_pos[live_rows[i]] = i;
  Matrix rest(live_rows.size(), live_cols.size());
  for (std::size_t j = 0; j < live_cols.size(); ++j)
    for (const auto& [r, v] : cols[live_cols[j]]) rest(row_pos[r], j) = v;
  const auto factors = invariant_factors(rest);
  out.free_rank += live_rows.size() - factors.size();
  for (const auto& d : factors)
    if (d != 1) out.torsion.push_back(d);
  return out;
}

AbelianStructure cokernel_structure(const Matrix& relations) {
  return cokernel_structure(SparseMatrix::from_dense(relations));
}

}  // namespace workbench
