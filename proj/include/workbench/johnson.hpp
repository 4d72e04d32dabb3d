#pragma once

// Johnson filtration of Aut(F_n) and the Johnson homomorphisms
//   tau_k : IA_n(k) -> Hom(H, L_{k+1}(H)),  [x] -> [phi(x) x^-1],
// computed from Magnus expansions. Values are reported in Lyndon coordinates;
// comparisons use the tensor form, which has no basis ambiguity.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "workbench/freelie.hpp"
#include "workbench/magnus.hpp"
#include "workbench/words.hpp"

namespace workbench {

/// c: x_i -> x_j^-1 x_i x_j.  m: x_i -> x_i [x_j,x_k].
/// E: x_j -> x_j x_i^p.  B: x_i -> x_i u^p, x_{i+1} -> x_{i+1} u^p with
/// u = x_i x_{i+1}^-1.  N: x_1 -> x_1^-1.
enum class GeneratorKind { c, m, E, B, N };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::c;
  std::vector<int> indices;
  long level = 0;  // p for E and B
  int rank = 2;

  /// `c:1,2`, `m:1,2,3`, `E:1,2:p`, `B:1:p`, `N`.
  static GeneratorSpec parse(const std::string& text, int rank);
  std::string to_string() const;
};

/// The generator with its inverse attached (and verified).
Endomorphism make_generator(const GeneratorSpec& spec);

/// Largest k with phi in IA_n(k), i.e. min_i lcs_weight(phi(x_i) x_i^-1) - 1.
/// 0 means phi acts nontrivially on H; ">= cap" when the cap is reached.
FiltrationWeight ia_weight(const Endomorphism& phi, int cap = kDefaultCap);
FiltrationWeight ia_weight_zassenhaus(const Endomorphism& phi, long p, int cap = kDefaultCap);

struct JohnsonValue {
  int k = 0;
  GradedDerivation derivation;
  std::vector<HomTensor> tensor_form;  // one per generator, degree k+1

  bool is_zero() const;
  /// `e<i> -> <Lie element>` lines.
  std::string to_string() const;
};

/// tau_k(phi). cap = 0 selects the default k+2. Throws DomainError when phi
/// is not in IA_n(k).
JohnsonValue tau(const Endomorphism& phi, int k, int cap = 0);
/// Componentwise rho of tau_k(phi): one WedgeTensor in H (x) Lambda^k H per generator.
std::vector<WedgeTensor> tau_hat(const JohnsonValue& value);
std::vector<WedgeTensor> tau_hat(const Endomorphism& phi, int k, int cap = 0);

/// (k-1)-fold iterated commutator, bracketed as a balanced tree, of random Magnus generators
/// (c_ij and, when |I| >= 3, m_ijk, each possibly inverted) with all indices
/// in I. Lies in IA_n(k) and fixes x_j for j outside I.
Endomorphism ia_commutator_sampler(int rank, std::span<const int> support, int k, std::mt19937_64& rng);
Endomorphism ia_commutator_sampler(int rank, std::span<const int> support, int k, std::uint64_t seed);

struct Certificate {
  int n = 0;
  int k = 0;
  bool pass = false;
  std::string failure;      // empty on success
  std::string w_lambda;     // the group commutator
  std::string lambda;       // its class in L_k
  std::string tau_image;    // tau_k(phi)(e_{k+1})
  std::string rho_image;    // tau_hat_k(phi)(e_{k+1})
  std::string contraction;  // (e_1^* (x) id) of the above
  bool nonzero = false;
  bool matches_bracket = false;
  bool wedge_ok = false;
};

/// For phi = conjugation by w_lambda = [[x_1,x_2],...,x_k] in Aut(F_n):
/// tau_hat_k(phi)(e_{k+1}) = rho([lambda, e_{k+1}]) != 0 and its contraction
/// with e_1^* is e_2 ^ ... ^ e_{k+1}. Requires n > k >= 1.
Certificate certificate_lower_bound(int n, int k);

struct SymplecticCertificate {
  int g = 0;
  int k = 0;
  bool pass = false;
  std::string failure;
  std::string pp_image;   // PP(lambda)(a_{k+1})
  std::string rho_image;  // rho of the above
  bool matches_bracket = false;
  bool nonzero = false;
};

/// With lambda = [[a_1,a_2],...,a_k]: PP(lambda)(a_{k+1}) = [lambda, a_{k+1}]
/// and its rho is nonzero. Requires g > k >= 1.
SymplecticCertificate certificate_symplectic(int g, int k);

}  // namespace workbench
