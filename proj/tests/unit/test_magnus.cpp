#include <doctest.h>

#include "gen.hpp"
#include "workbench/error.hpp"
#include "workbench/freelie.hpp"
#include "workbench/magnus.hpp"

using namespace workbench;

namespace {

FreeWord w(const char* text, int rank = 3) { return FreeWord::parse(text, rank); }

HomTensor tensor(int rank, int degree, std::initializer_list<std::pair<IndexWord, int>> terms) {
  HomTensor t(BasisContext(rank), degree);
  for (const auto& [m, c] : terms) t.add_term(m, c);
  return t;
}

}  // namespace

TEST_CASE("expansions of generators and inverses") {
  CHECK(expand(w("x1"), 3).to_string() == "1 * 1\n1 * X1");
  CHECK(expand(w("x1^-1"), 2).to_string() == "1 * 1\n-1 * X1\n1 * X1 X1");
  const TruncatedSeries c = expand(commutator(w("x1"), w("x2")), 2);
  CHECK(c.homogeneous(1).empty());
  CHECK(homogeneous_tensor(c, 2) == tensor(3, 2, {{{1, 2}, 1}, {{2, 1}, -1}}));
}

TEST_CASE("mod-p expansions keep reduced coefficients") {
  const TruncatedSeries s = expand(w("x1 x1 x1"), 3, 3);
  CHECK(s.to_string() == "1 * 1\n1 * X1 X1 X1");
  const TruncatedSeries t = expand(w("x1^-1 x2 x1^-1"), 5, 5);
  for (const auto& [m, c] : t.terms()) CHECK((c >= 0 && c < 5));
}

TEST_CASE("expansion is multiplicative") {
  gen::Rng rng(21);
  for (int t = 0; t < 1000; ++t) {
    const int n = gen::uniform(rng, 1, 3);
    const FreeWord u = gen::word(rng, n, 7), v = gen::word(rng, n, 7);
    CHECK(expand(multiply(u, v), 4) == expand(u, 4) * expand(v, 4));
  }
  for (int t = 0; t < 100; ++t) {
    const FreeWord u = gen::word(rng, 3, 9);
    CHECK(expand(invert(u), 4) * expand(u, 4) == TruncatedSeries::one(3, 4));
    CHECK(expand(invert(u), 4, 7) * expand(u, 4, 7) == TruncatedSeries::one(3, 4, 7));
  }
}

TEST_CASE("the dense and sparse paths agree on long words") {
  gen::Rng rng(22);
  for (int t = 0; t < 30; ++t) {
    const FreeWord u = gen::word(rng, 3, 40);
    TruncatedSeries product = TruncatedSeries::one(3, 6);
    for (Letter l : u.letters()) {
      const std::vector<Letter> one{l};
      product = product * expand(FreeWord::reduce(one, 3), 6);
    }
    CHECK(expand(u, 6) == product);
  }
}

TEST_CASE("lower central series weights") {
  CHECK(lcs_weight(w("x1")) == FiltrationWeight{1, false});
  const FreeWord c12 = commutator(w("x1"), w("x2"));
  CHECK(lcs_weight(c12).value == 2);
  CHECK(lcs_weight(commutator(c12, w("x3"))).value == 3);
  CHECK(lcs_weight(w("1"), 5) == FiltrationWeight{6, true});
  CHECK(lcs_weight(w("1"), 5).to_string() == ">= 6");

  gen::Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    const FreeWord u = gen::word(rng, 3, 5), v = gen::word(rng, 3, 5);
    if (u.empty() || v.empty()) continue;
    const FiltrationWeight wu = lcs_weight(u, 6), wv = lcs_weight(v, 6), wc = lcs_weight(commutator(u, v), 6);
    CHECK(wc.value >= std::min(wu.value + wv.value, 7));
  }
}

TEST_CASE("Zassenhaus weights") {
  CHECK(zassenhaus_weight(w("x1 x1"), 2).value == 2);
  for (long p : {2, 3, 5, 7}) {
    CHECK(zassenhaus_weight(power(w("x1"), p), p, 8).value == p);
    CHECK(zassenhaus_weight(commutator(w("x1"), w("x2")), p).value == 2);
  }
  CHECK_THROWS_AS(zassenhaus_weight(w("x1"), 4), DomainError);

  // u^{p^j} with u of weight i lands in the (i p^j)-th term
  gen::Rng rng(24);
  for (int t = 0; t < 60; ++t) {
    const long p = (t % 2) ? 2 : 3;
    const FreeWord a = gen::word(rng, 3, 3), b = gen::word(rng, 3, 3);
    const FreeWord u = commutator(a, b);
    if (u.empty()) continue;
    const int i = lcs_weight(u, 8).value;
    if (i * p > 8) continue;
    CHECK(zassenhaus_weight(power(u, p), p, 8).value >= i * p);
  }
}

TEST_CASE("leading parts") {
  CHECK(leading_part(commutator(w("x1"), w("x2"))) == tensor(3, 2, {{{1, 2}, 1}, {{2, 1}, -1}}));
  CHECK(leading_part(w("x1 x1 x1")) == tensor(3, 1, {{{1}, 3}}));
  const BasisContext ctx(3);
  const FreeWord c = commutator(commutator(w("x1"), w("x2")), w("x3"));
  CHECK(leading_part(c) == pbw_embed(left_normed(ctx, {1, 2, 3})));
  CHECK_THROWS_AS(leading_part(w("1"), 4), DomainError);

  gen::Rng rng(25);
  for (int t = 0; t < 100; ++t) {
    const FreeWord u = commutator(gen::word(rng, 3, 4), gen::word(rng, 3, 4));
    if (u.empty()) continue;
    const FiltrationWeight k = lcs_weight(u, 6);
    if (k.at_least) continue;
    const HomTensor lead = leading_part(u, 6);
    // primitive: Dynkin map multiplies by the degree
    CHECK(dynkin(lead) == lead * Integer(k.value));
    // gr_k is abelian
    const FreeWord v = commutator(gen::word(rng, 3, 4), gen::word(rng, 3, 4));
    if (v.empty() || lcs_weight(v, 6).value != k.value) continue;
    const HomTensor sum = lead + leading_part(v, 6);
    if (!sum.is_zero()) CHECK(leading_part(multiply(u, v), 6) == sum);
  }
}
