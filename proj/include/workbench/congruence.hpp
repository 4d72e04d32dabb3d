#pragma once

// Level-p congruence subgroups of SL_n(Z) and Sp_2g(Z): the explicit
// generator families, membership predicates and the mod-p "logarithm"
// 1 + pA -> A mod p used to certify that the symplectic generators span sp_2g(Z/p).
//
// Symplectic matrices act on Z^{2g} with basis (a_1..a_g, b_1..b_g) and form
// J = [[0, 1_g], [-1_g, 0]].

#include <string>
#include <vector>

#include "workbench/matrix.hpp"

namespace workbench {

struct NamedMatrix {
  std::string name;
  Matrix matrix;
};

// --- SL_n ---------------------------------------------------------------------

/// E_ij(r) = 1 + eps_ij(r), i != j.
Matrix sl_E(int n, int i, int j, const Integer& r);
/// B_i(r) = 1 + beta_i(r): (i,i) = (i,i+1) = r, (i+1,i) = (i+1,i+1) = -r.
Matrix sl_B(int n, int i, const Integer& r);
/// Identity with (1,1) entry -1.
Matrix sl_N1(int n);
/// {E_ij(p) : i != j} and {B_i(p) : i < n}, in that order.
std::vector<NamedMatrix> sl_generators(int n, long p);

// --- Sp_2g --------------------------------------------------------------------

enum class SpKind { X, Y, Z, W, U };

/// X(i,j) and Y(i,j) need i <= j, Z(i,j) needs i != j, W(i) needs i < g; U ignores indices.
Matrix gen_sp(SpKind kind, int g, int i, int j, const Integer& r);
/// The 2g^2 + g generators X, Y, Z, W, U at level p, in that order.
std::vector<NamedMatrix> sp_generators(int g, long p);

struct SymplecticContext {
  int g = 1;
  Matrix J;
  explicit SymplecticContext(int genus);
};

bool is_level(const Matrix& m, long p);
/// M^T J M = J exactly. Throws DomainError on a dimension mismatch.
bool is_symplectic(const Matrix& m, const SymplecticContext& ctx);
/// A mod p where M = 1 + pA. Throws DomainError unless M is level p.
Matrix congruence_log(const Matrix& m, long p);
/// A^T J + J A = 0 mod p.
bool in_sp_lie(const Matrix& a, const SymplecticContext& ctx, long p);

/// Rank over Z/p of the given vectors (each entry reduced mod p).
int rank_mod_p(const std::vector<std::vector<Integer>>& vectors, long p);

struct LieRankResult {
  int g = 0;
  long p = 0;
  int rank = 0;
  int expected = 0;  // dim sp_2g = 2g^2 + g
  int generators = 0;
  /// Generators that did not raise the rank when added in order.
  std::vector<std::string> dependent;
  bool pass() const { return rank == expected; }
};

/// Rank of the span of congruence_log over the given level-p symplectic generators.
LieRankResult lie_rank(const std::vector<NamedMatrix>& gens, int g, long p);
/// lie_rank over sp_generators(g, p). Requires g >= 2 and p prime.
LieRankResult lie_rank_certificate(int g, long p);

struct LiftRecord {
  std::string name;
  bool matches = false;  // abelianization equals the matrix generator
  bool level = false;    // acts trivially on H_1(F_n; Z/level)
  long level_modulus = 0;
  std::string witness;   // abelianization when something fails
  bool pass() const { return matches && level; }
};

struct LiftReport {
  int n = 0;
  long p = 0;
  std::vector<LiftRecord> records;
  bool pass() const;
};

/// Abelianizations of the lifted automorphisms E~_ij(p), B~_i(p) and N~_1
/// against E_ij(p), B_i(p) and N_1. N~_1 is checked at level 2.
LiftReport sl_lift_check(int n, long p);

}  // namespace workbench
