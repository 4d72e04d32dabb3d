#pragma once

// Free Lie algebra L(H) over the integers, H = Z^n with basis e_1..e_n.
//
// Lie elements are stored in Lyndon coordinates: a homogeneous element of
// degree k is a map from Lyndon words of length k to integer coefficients,
// each Lyndon word standing for its right standard bracketing. Tensors in
// T(H) are maps from index sequences to coefficients.
//
// For symplectic contexts (n = 2g) the basis is ordered
// (a_1, ..., a_g, b_1, ..., b_g), so a_i = e_i and b_i = e_{g+i}, with
// intersection pairing i(a_i, b_j) = delta_ij and i(b_j, a_i) = -delta_ij.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "workbench/integer.hpp"

namespace workbench {

using IndexWord = std::vector<int>;

class BasisContext {
 public:
  BasisContext() = default;
  explicit BasisContext(int rank, bool symplectic = false);
  static BasisContext symplectic_genus(int g) { return BasisContext(2 * g, true); }

  int rank() const { return rank_; }
  bool symplectic() const { return symplectic_; }
  /// Requires a symplectic context.
  int genus() const;
  int a(int i) const { return i; }
  int b(int i) const { return genus() + i; }
  /// Intersection pairing i(e_x, e_y) on basis vectors; requires a symplectic context.
  int pairing(int x, int y) const;
  void check_index(int i) const;

  friend bool operator==(const BasisContext&, const BasisContext&) = default;

 private:
  int rank_ = 1;
  bool symplectic_ = false;
};

/// Homogeneous element of H^{\otimes m}.
class HomTensor {
 public:
  using Terms = std::map<IndexWord, Integer>;

  HomTensor() = default;
  HomTensor(BasisContext ctx, int degree) : ctx_(ctx), degree_(degree) {}

  const BasisContext& context() const { return ctx_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of a monomial (0 when absent).
  Integer coefficient(const IndexWord& m) const;

  /// Adds c * m, dropping the entry when it cancels.
  void add_term(const IndexWord& m, const Integer& c);
  HomTensor& operator+=(const HomTensor& rhs);
  HomTensor& operator-=(const HomTensor& rhs);
  HomTensor& operator*=(const Integer& s);
  friend HomTensor operator+(HomTensor a, const HomTensor& b) { return a += b; }
  friend HomTensor operator-(HomTensor a, const HomTensor& b) { return a -= b; }
  friend HomTensor operator*(HomTensor a, const Integer& s) { return a *= s; }
  /// Concatenation product in T(H).
  friend HomTensor operator*(const HomTensor& a, const HomTensor& b);
  friend bool operator==(const HomTensor& a, const HomTensor& b) {
    return a.ctx_ == b.ctx_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// `coeff * e1⊗e2` lines sorted by monomial, `0` for the zero tensor.
  std::string to_string() const;

 private:
  BasisContext ctx_;
  int degree_ = 0;
  Terms terms_;
};

class LieElement {
 public:
  using Coords = std::map<IndexWord, Integer>;

  LieElement() = default;
  LieElement(BasisContext ctx, int degree) : ctx_(ctx), degree_(degree) {}
  static LieElement basis(const BasisContext& ctx, int i);
  /// From Lyndon coordinates; keys must be Lyndon words of the given degree.
  static LieElement from_coords(const BasisContext& ctx, int degree, const Coords& coords);
  /// Parses `coeff * [i,[j,k]]` lines (any bracketing; evaluated with `bracket`).
  static LieElement parse(const BasisContext& ctx, const std::string& text);

  const BasisContext& context() const { return ctx_; }
  int degree() const { return degree_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Integer coefficient(const IndexWord& lyndon) const;

  LieElement& operator+=(const LieElement& rhs);
  LieElement& operator-=(const LieElement& rhs);
  LieElement& operator*=(const Integer& s);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(LieElement a, const Integer& s) { return a *= s; }
  friend LieElement operator-(LieElement a) { return a *= Integer(-1); }
  friend bool operator==(const LieElement& a, const LieElement& b) {
    return a.ctx_ == b.ctx_ && a.degree_ == b.degree_ && a.coords_ == b.coords_;
  }

  /// `coeff * [i,[j,k]]` lines in Lyndon order, `0` for zero.
  std::string to_string() const;

 private:
  friend LieElement lie_project_unchecked(const HomTensor& t);
  void add_coord(const IndexWord& w, const Integer& c);

  BasisContext ctx_;
  int degree_ = 0;
  Coords coords_;
};

/// Degree-k derivation of L(H): images of the basis vectors, all in L_{k+1}.
class GradedDerivation {
 public:
  GradedDerivation() = default;
  GradedDerivation(BasisContext ctx, int degree, std::vector<LieElement> images);
  static GradedDerivation zero(const BasisContext& ctx, int degree);

  const BasisContext& context() const { return ctx_; }
  int degree() const { return degree_; }
  /// Image of e_i (1-based).
  const LieElement& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<LieElement>& images() const { return images_; }
  bool is_zero() const;

  GradedDerivation& operator+=(const GradedDerivation& rhs);
  GradedDerivation& operator-=(const GradedDerivation& rhs);
  friend GradedDerivation operator+(GradedDerivation a, const GradedDerivation& b) { return a += b; }
  friend GradedDerivation operator-(GradedDerivation a, const GradedDerivation& b) { return a -= b; }
  friend bool operator==(const GradedDerivation&, const GradedDerivation&) = default;

  std::string to_string() const;

 private:
  BasisContext ctx_;
  int degree_ = 0;
  std::vector<LieElement> images_;
};

/// Element of Lambda^k H, keyed by strictly increasing index tuples.
class ExteriorVector {
 public:
  using Terms = std::map<IndexWord, Integer>;
  ExteriorVector() = default;
  ExteriorVector(BasisContext ctx, int k) : ctx_(ctx), k_(k) {}
  /// e_{i1} ^ ... ^ e_{ik} normalised with sign; repeated indices give zero.
  static ExteriorVector wedge(const BasisContext& ctx, const IndexWord& indices);

  int k() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const IndexWord& increasing, const Integer& c);
  friend bool operator==(const ExteriorVector&, const ExteriorVector&) = default;
  std::string to_string() const;

 private:
  BasisContext ctx_;
  int k_ = 0;
  Terms terms_;
};

/// Element of H (x) Lambda^k H.
class WedgeTensor {
 public:
  using Key = std::pair<int, IndexWord>;
  using Terms = std::map<Key, Integer>;

  WedgeTensor() = default;
  WedgeTensor(BasisContext ctx, int k) : ctx_(ctx), k_(k) {}

  const BasisContext& context() const { return ctx_; }
  int k() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * e_first (x) (e_{j1} ^ ... ^ e_{jk}); the tail is sorted with sign.
  void add_term(int first, const IndexWord& tail, const Integer& c);
  WedgeTensor& operator+=(const WedgeTensor& rhs);
  friend bool operator==(const WedgeTensor&, const WedgeTensor&) = default;

  /// Applies the dual functional e_index^* to the first factor.
  ExteriorVector contract_first(int index) const;

  /// `coeff * e<i> ^ e<j1>∧…∧e<jk>` lines.
  std::string to_string() const;

 private:
  BasisContext ctx_;
  int k_ = 0;
  Terms terms_;
};

// --- Lyndon words -----------------------------------------------------------

bool is_lyndon(const IndexWord& w);
/// All Lyndon words of length k over 1..n in lexicographic order (Duval).
std::vector<IndexWord> lyndon_words(int n, int k);
/// Right standard factorisation w = uv with v the longest proper Lyndon suffix.
std::pair<IndexWord, IndexWord> standard_factorization(const IndexWord& w);
/// Nested bracket text of a Lyndon word, e.g. `[1,[1,2]]`.
std::string bracket_text(const IndexWord& lyndon);

struct LyndonBasisElement {
  IndexWord word;
  std::string bracketing;
};
std::vector<LyndonBasisElement> lyndon_basis(const BasisContext& ctx, int k);

// --- PBW embedding and its inverse ----------------------------------------

/// Expansion of the standard bracketing of a Lyndon word in T(H).
HomTensor pbw_of_lyndon(const BasisContext& ctx, const IndexWord& lyndon);
HomTensor pbw_embed(const LieElement& x);
/// Dynkin map X_{i1}...X_{im} -> [...[X_{i1},X_{i2}],...,X_{im}] expanded in T(H).
HomTensor dynkin(const HomTensor& t);
/// Inverse of pbw_embed. Throws NotLieElement when t fails the Dynkin check
/// D(t) = m t or is not in the image of the embedding.
LieElement lie_project(const HomTensor& t);
/// Same, skipping the Dynkin pre-check (throws NotLieElement if the solve fails).
LieElement lie_project_unchecked(const HomTensor& t);

// --- Lie operations --------------------------------------------------------

LieElement bracket(const LieElement& x, const LieElement& y);
/// [[...[e_{i1}, e_{i2}], ...], e_{ik}].
LieElement left_normed(const BasisContext& ctx, const IndexWord& indices);
/// L_{k+1}(H) -> H (x) Lambda^k H: PBW embedding followed by the projection
/// of the last k factors onto the exterior power. Requires degree >= 2.
WedgeTensor rho_truncate(const LieElement& x);

GradedDerivation inner_derivation(const LieElement& x);
/// Leibniz extension of d evaluated at x.
LieElement derivation_apply(const GradedDerivation& d, const LieElement& x);
/// [d1, d2](h) = d1(d2(h)) - d2(d1(h)).
GradedDerivation derivation_bracket(const GradedDerivation& d1, const GradedDerivation& d2);

/// omega = sum_i [a_i, b_i].
LieElement omega(const BasisContext& ctx);
/// PP_1(x): h -> [x,h] + i(h,x) omega, for x of degree 1.
GradedDerivation pp1(const LieElement& x);
/// Lie algebra extension of PP_1, computed along the Lyndon factorisation of x.
GradedDerivation pp(const LieElement& x);

/// Binary bracket expression over basis indices, used to evaluate alternative
/// bracketings of the same element.
struct BracketExpr {
  int leaf = 0;  // basis index when this is a leaf
  std::vector<BracketExpr> children;  // empty or exactly two

  static BracketExpr parse(const std::string& text);
  bool is_leaf() const { return children.empty(); }
  int degree() const;
  std::string to_string() const;
};
LieElement evaluate(const BasisContext& ctx, const BracketExpr& expr);
/// PP along an explicit bracketing: PP([u,v]) = [PP(u), PP(v)].
GradedDerivation pp(const BasisContext& ctx, const BracketExpr& expr);

}  // namespace workbench
