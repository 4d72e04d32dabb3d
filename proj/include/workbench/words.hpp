#pragma once

// Reduced words in the free group F_n = <x_1, ..., x_n> and endomorphisms
// given by generator images.
//
// Group commutator convention: [a,b] = a^-1 b^-1 a b, conjugation
// a^b = b^-1 a b. The Magnus leading term of [a,b] is AB - BA, so these
// conventions carry straight through to the Lie bracket used by tau_k.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "workbench/matrix.hpp"

namespace workbench {

/// A letter: +i stands for x_i, -i for x_i^-1 (i >= 1).
using Letter = int;

class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(int rank) : rank_(rank) {}

  /// Freely reduces a raw letter sequence. Throws DomainError when an index
  /// is zero or exceeds rank.
  static FreeWord reduce(std::span<const Letter> letters, int rank);
  static FreeWord generator(int rank, int i);
  static FreeWord identity(int rank) { return FreeWord(rank); }
  /// Parses `x2^-1 x1 x2`; the empty word is spelled `1`.
  static FreeWord parse(std::string_view text, int rank);

  int rank() const { return rank_; }
  std::span<const Letter> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::string to_string() const;

  /// Exponent-sum vector (length rank).
  std::vector<Integer> exponent_sums() const;

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord& a, const FreeWord& b) {
    if (a.rank_ != b.rank_) return a.rank_ <=> b.rank_;
    return a.letters_ <=> b.letters_;
  }

 private:
  int rank_ = 1;
  std::vector<Letter> letters_;
};

FreeWord multiply(const FreeWord& u, const FreeWord& v);
FreeWord invert(const FreeWord& u);
/// [u,v] = u^-1 v^-1 u v.
FreeWord commutator(const FreeWord& u, const FreeWord& v);
/// u^v = v^-1 u v.
FreeWord conjugate(const FreeWord& u, const FreeWord& v);
/// u^e for any integer e.
FreeWord power(const FreeWord& u, long e);
/// Left-normed commutator [[...[w_1,w_2],...],w_k]; a single word is returned unchanged.
FreeWord left_normed_commutator(std::span<const FreeWord> words);

class Endomorphism {
 public:
  /// Without inverse data.
  explicit Endomorphism(std::vector<FreeWord> images);
  /// With caller-supplied inverse images; both composites are checked to fix
  /// every generator and DomainError is thrown otherwise.
  Endomorphism(std::vector<FreeWord> images, std::vector<FreeWord> inverse_images);

  static Endomorphism identity(int rank);
  /// x -> w x w^-1, with inverse x -> w^-1 x w.
  static Endomorphism conjugation(const FreeWord& w);
  /// Parses the `x<k> -> <word>` line format with an optional `# inverse` section.
  static Endomorphism parse(std::string_view text);

  int rank() const { return static_cast<int>(images_.size()); }
  const FreeWord& image(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<FreeWord>& images() const { return images_; }
  bool has_inverse() const { return inverse_.has_value(); }
  const std::optional<std::vector<FreeWord>>& inverse_images() const { return inverse_; }

  /// The inverse automorphism; requires inverse data.
  Endomorphism inverse() const;

  FreeWord apply(const FreeWord& w) const;

  /// True when every generator outside `support` is fixed and the images of
  /// generators in `support` only involve generators in `support`.
  bool supported_on(std::span<const int> support) const;

  std::string to_string() const;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) { return a.images_ == b.images_; }

 private:
  struct Unchecked {};
  Endomorphism(std::vector<FreeWord> images, std::optional<std::vector<FreeWord>> inverse, Unchecked);
  friend Endomorphism compose(const Endomorphism&, const Endomorphism&);

  std::vector<FreeWord> images_;
  std::optional<std::vector<FreeWord>> inverse_;
};

FreeWord apply_endo(const Endomorphism& e, const FreeWord& w);
/// (e1 o e2)(x) = e1(e2(x)); inverse data is composed in reverse order when both carry it.
Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2);
/// Group commutator of automorphisms [a,b] = a^-1 b^-1 a b (composition product).
Endomorphism commutator(const Endomorphism& a, const Endomorphism& b);
/// Column i is the exponent-sum vector of e(x_i).
Matrix abelianize(const Endomorphism& e);

}  // namespace workbench
