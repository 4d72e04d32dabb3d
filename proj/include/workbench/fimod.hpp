#pragma once

// Finitely presented FI-modules restricted to the subsets of [N] = {1..N}.
//
// A module is given by a presented abelian group W_I for every I ⊆ [N], a map
// W_I -> W_{I+j} for every one-element inclusion, and for every I the action
// of the adjacent transpositions of I (swapping its p-th and (p+1)-th smallest
// elements) on W_I. The map W_I -> W_J for I ⊆ J composes the one-step maps in
// ascending order of the added elements; validate() checks that every other
// order gives the same map.
//
// Central stabilization at J (|J| >= 1):
//   psi: (+)_{I ⊂ J, |I|=|J|-1} W_I -> W_J, blocks ordered by the missing element;
//   eta: (+)_{K ⊂ J, |K|=|J|-2} W_K -> (+) W_I, x in the block K = J-{u,v}, u < v,
//        goes to +W_K^{J-u}(x) in block J-u and -W_K^{J-v}(x) in block J-v;
//   Stab_J = coker(eta), with the natural map to W_J induced by psi.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "workbench/matrix.hpp"
#include "workbench/snf.hpp"

namespace workbench {

/// Subset of [N] as a bitmask: element i is bit i-1.
using Subset = std::uint32_t;

inline constexpr int kMaxFiN = 12;

int subset_size(Subset s);
bool subset_contains(Subset s, int i);
std::vector<int> subset_elements(Subset s);
Subset subset_of(const std::vector<int>& elements);
/// `1,3,4`; the empty set is the empty string.
std::string subset_key(Subset s);
Subset parse_subset_key(const std::string& key);

/// Z^ngens modulo the column span of relations.
struct FGAbelian {
  std::size_t ngens = 0;
  Matrix relations;  // ngens x (number of relators)

  static FGAbelian free(std::size_t n) { return {n, Matrix(n, 0)}; }
  AbelianStructure structure() const;
  friend bool operator==(const FGAbelian&, const FGAbelian&) = default;
};

/// Direct sum with block-diagonal relations.
FGAbelian direct_sum(const std::vector<FGAbelian>& parts);

struct AbMap {
  FGAbelian source;
  FGAbelian target;
  Matrix matrix;  // target.ngens x source.ngens

  /// Relators go to the span of the target relators.
  bool well_defined() const;
  bool surjective() const;
  /// Exact kernel test: every x with matrix x in span(target relations) lies
  /// in span(source relations). Dense; intended for small presentations.
  bool injective() const;
  /// Surjective with source and target of the same isomorphism type; a
  /// surjection between isomorphic finitely generated abelian groups is an
  /// isomorphism.
  bool iso() const;
};

/// a and b agree as maps source -> target (difference lands in the target relations).
bool maps_agree(const Matrix& a, const Matrix& b, const FGAbelian& target);

class FIModulePresentation {
 public:
  FIModulePresentation() = default;
  explicit FIModulePresentation(int N);

  int N() const { return N_; }
  Subset full() const { return static_cast<Subset>((std::uint64_t{1} << N_) - 1); }
  const FGAbelian& group(Subset I) const { return groups_.at(I); }
  void set_group(Subset I, FGAbelian g);

  /// W_I -> W_{I+j}; j must not be in I.
  const Matrix& step(Subset I, int j) const;
  void set_step(Subset I, int j, Matrix m);
  /// Swap of the p-th and (p+1)-th smallest elements of I (p is 1-based), acting on W_I.
  const Matrix& transposition(Subset I, int p) const;
  void set_transposition(Subset I, int p, Matrix m);

  /// W_I^J for I ⊆ J, composed in ascending order of J - I.
  Matrix inclusion(Subset I, Subset J) const;
  /// The same along an explicit order of the added elements.
  Matrix inclusion_along(Subset I, const std::vector<int>& order) const;

  nlohmann::json to_json() const;
  static FIModulePresentation from_json(const nlohmann::json& doc);
  static FIModulePresentation parse(const std::string& text);

 private:
  int N_ = 0;
  std::vector<FGAbelian> groups_;
  std::map<std::pair<Subset, int>, Matrix> steps_;
  std::map<std::pair<Subset, int>, Matrix> transpositions_;
};

struct ValidationReport {
  bool valid = true;
  std::size_t checks = 0;
  std::string violation;  // first violated relation, empty when valid
};

/// Well-definedness of every structure map, commuting squares of inclusions,
/// Coxeter relations of the transpositions on every W_I, naturality of
/// transpositions that preserve I, and triviality of transpositions that fix
/// the image of W_K pointwise.
ValidationReport validate(const FIModulePresentation& m);

AbMap psi(const FIModulePresentation& m, Subset J);
AbMap eta(const FIModulePresentation& m, Subset J);

struct StabResult {
  Subset J = 0;
  FGAbelian stab;  // presented on the generators of the psi source
  AbMap nat_map;
  AbelianStructure stab_structure;
  AbelianStructure target_structure;
  bool surjective = false;
  bool iso = false;
};

StabResult central_stabilization(const FIModulePresentation& m, Subset J);

/// A value in 0..N, or the marker ">= N" when the sweep window cannot decide.
struct SweepValue {
  int value = 0;
  bool at_least = false;
  std::string to_string() const { return (at_least ? ">= " : "") + std::to_string(value); }
};

/// Least A such that W_J is generated by the images of the W_I, |I| = A,
/// for every J with |J| > A.
SweepValue generation_degree(const FIModulePresentation& m);

struct StabilityTable {
  std::vector<StabResult> rows;  // every nonempty J, by size then key
  SweepValue start;
};

/// Least E with Stab_J -> W_J an isomorphism for all E < |J| <= N.
StabilityTable stability_start(const FIModulePresentation& m);

// --- builtin modules ------------------------------------------------------------

enum class BuiltinKind { constant, standard, exterior, tensor_wedge };

struct BuiltinSpec {
  BuiltinKind kind = BuiltinKind::constant;
  int param = 0;  // m for exterior, k for tensor_wedge

  /// `constant`, `standard`, `exterior:m`, `tensor_wedge:k`.
  static BuiltinSpec parse(const std::string& name);
  std::string name() const;
};

/// constant: Z everywhere. standard: Z^I. exterior(m): Lambda^m Z^I.
/// tensor_wedge(k): H (x) Lambda^k H with H_I = Z^{2|I|} spanned by a_i, b_i.
FIModulePresentation builtin(const BuiltinSpec& spec, int N);

/// V_I = Z<e_i, f_i : i in I> / (e_i - f_i): presented with redundant generators.
FIModulePresentation doubled_standard(int N);

// --- morphisms ------------------------------------------------------------------

struct FIMorphism {
  std::vector<Matrix> maps;  // indexed by subset, W_I of the source -> W_I of the target
};

/// standard -> constant, e_i -> 1.
FIMorphism sum_morphism(const FIModulePresentation& standard, const FIModulePresentation& constant);
/// doubled_standard -> standard, e_i, f_i -> e_i.
FIMorphism fold_morphism(const FIModulePresentation& doubled, const FIModulePresentation& standard);

/// Well-defined at every I and natural for steps and transpositions.
ValidationReport validate_morphism(const FIModulePresentation& v, const FIModulePresentation& w, const FIMorphism& f);

struct InducedStab {
  AbMap map;           // Stab(V)_J -> Stab(W)_J
  bool well_defined = false;
  bool commutes = false;  // nat_W o map = f_J o nat_V
};

InducedStab induced_stab_map(const FIModulePresentation& v, const FIModulePresentation& w, const FIMorphism& f,
                             Subset J);

/// f_J as a map of presented groups.
AbMap component(const FIModulePresentation& v, const FIModulePresentation& w, const FIMorphism& f, Subset J);

}  // namespace workbench
