#pragma once

// Magnus expansion x_i -> 1 + X_i into noncommutative power series truncated
// at a total-degree cap, over Z (modulus 0) or Z/p.
//
// Over Z the lowest nonconstant degree of expand(w) - 1 is the lower central
// series weight of w (Magnus); over Z/p it is the Zassenhaus (dimension
// subgroup) weight (Jennings, Zassenhaus). Both are classical theorems that
// this code relies on rather than re-proves.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "workbench/freelie.hpp"
#include "workbench/integer.hpp"
#include "workbench/words.hpp"

namespace workbench {

/// Default truncation degree for expansions when the caller has no better cap.
inline constexpr int kDefaultCap = 8;

class TruncatedSeries {
 public:
  using Terms = std::map<IndexWord, Integer>;

  TruncatedSeries() = default;
  /// The zero series. modulus is 0 (integers) or a prime.
  TruncatedSeries(int rank, int cap, long modulus = 0);
  static TruncatedSeries one(int rank, int cap, long modulus = 0);
  /// 1 + X_i.
  static TruncatedSeries generator(int rank, int cap, int i, long modulus = 0);

  int rank() const { return rank_; }
  int cap() const { return cap_; }
  long modulus() const { return modulus_; }
  const Terms& terms() const { return terms_; }
  Integer coefficient(const IndexWord& m) const;

  /// Adds c * X_m; dropped when |m| > cap, reduced mod p when applicable.
  void add_term(const IndexWord& m, const Integer& c);
  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  /// Truncated product.
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  /// Terms of total degree d.
  Terms homogeneous(int d) const;
  /// Least d >= 1 with a nonzero degree-d term, if any.
  std::optional<int> lowest_positive_degree() const;

  /// `coeff * X1 X2` lines ordered by (degree, monomial); `coeff * 1` for
  /// the constant term; `0` for the zero series.
  std::string to_string() const;

 private:
  int rank_ = 1;
  int cap_ = 1;
  long modulus_ = 0;
  Terms terms_;
};

/// A filtration degree, or the marker ">= value" when the expansion could not
/// see past the cap.
struct FiltrationWeight {
  int value = 1;
  bool at_least = false;

  bool is_marker() const { return at_least; }
  /// True when the weight is known to be >= k.
  bool reaches(int k) const { return value >= k; }
  std::string to_string() const { return (at_least ? ">= " : "") + std::to_string(value); }
  friend bool operator==(const FiltrationWeight&, const FiltrationWeight&) = default;
};

TruncatedSeries expand(const FreeWord& w, int cap, long modulus = 0);
/// Largest k with w in gamma_k, or ">= cap+1" when w - 1 vanishes through the cap.
FiltrationWeight lcs_weight(const FreeWord& w, int cap = kDefaultCap);
/// The same with mod-p coefficients. Throws DomainError unless p is prime.
FiltrationWeight zassenhaus_weight(const FreeWord& w, long p, int cap = kDefaultCap);
/// Degree-k component of expand(w) where k = lcs_weight(w). Throws
/// DomainError when the weight exceeds the cap.
HomTensor leading_part(const FreeWord& w, int cap = kDefaultCap);

/// Degree-d component of a series as a tensor.
HomTensor homogeneous_tensor(const TruncatedSeries& s, int d);

}  // namespace workbench
