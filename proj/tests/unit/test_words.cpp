#include <doctest.h>

#include "gen.hpp"
#include "workbench/congruence.hpp"
#include "workbench/error.hpp"
#include "workbench/johnson.hpp"
#include "workbench/words.hpp"

using namespace workbench;

namespace {

FreeWord w(const char* text, int rank = 3) { return FreeWord::parse(text, rank); }

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  const std::vector<Letter> a{1, -1}, b{1, 2, -2, 1}, c{-2, 1, 2};
  CHECK(FreeWord::reduce(a, 2).empty());
  CHECK(FreeWord::reduce(b, 2).to_string() == "x1 x1");
  CHECK(FreeWord::reduce(c, 2).to_string() == "x2^-1 x1 x2");
  const std::vector<Letter> bad{3};
  CHECK_THROWS_AS(FreeWord::reduce(bad, 2), DomainError);
}

TEST_CASE("word grammar round trips") {
  CHECK(w("1").empty());
  CHECK(w("1").to_string() == "1");
  CHECK(w("x2^-1   x1 x2").to_string() == "x2^-1 x1 x2");
  CHECK_THROWS_AS(w("x4"), DomainError);
  CHECK_THROWS_AS(w("y1"), ParseError);
  CHECK_THROWS_AS(w("x1^2"), ParseError);
}

TEST_CASE("multiply, invert and commutator on the stated examples") {
  CHECK(multiply(w("x1"), w("x1^-1")).empty());
  CHECK(multiply(w("x1 x2"), w("x2^-1")) == w("x1"));
  CHECK(multiply(w("x1"), w("x2")).to_string() == "x1 x2");
  CHECK(invert(w("x1 x2")).to_string() == "x2^-1 x1^-1");
  CHECK(invert(w("1")).empty());
  CHECK(invert(w("x1^-1")) == w("x1"));
  CHECK(commutator(w("x1"), w("x2")).to_string() == "x1^-1 x2^-1 x1 x2");
  CHECK(commutator(w("x1"), w("x1")).empty());
  CHECK(conjugate(w("x1"), w("x2")).to_string() == "x2^-1 x1 x2");
  CHECK_THROWS_AS(multiply(w("x1", 2), w("x1", 3)), DomainError);
}

TEST_CASE("group axioms on random words") {
  gen::Rng rng(11);
  for (int t = 0; t < 500; ++t) {
    const int n = gen::uniform(rng, 1, 4);
    const FreeWord u = gen::word(rng, n, 8), v = gen::word(rng, n, 8), x = gen::word(rng, n, 8);
    CHECK(FreeWord::reduce(u.letters(), n) == u);
    CHECK(multiply(multiply(u, v), x) == multiply(u, multiply(v, x)));
    CHECK(invert(multiply(u, v)) == multiply(invert(v), invert(u)));
    CHECK(multiply(u, invert(u)).empty());
    CHECK(invert(invert(u)) == u);
  }
}

TEST_CASE("Witt-Hall identities hold as reduced words") {
  gen::Rng rng(12);
  for (int t = 0; t < 1000; ++t) {
    const int n = gen::uniform(rng, 2, 4);
    const FreeWord a = gen::word(rng, n, 6), b = gen::word(rng, n, 6), c = gen::word(rng, n, 6);
    CHECK(commutator(a, multiply(b, c)) == multiply(commutator(a, c), conjugate(commutator(a, b), c)));
    CHECK(commutator(multiply(a, b), c) == multiply(conjugate(commutator(a, c), b), commutator(b, c)));
  }
}

TEST_CASE("apply_endo is a homomorphism and matches the named generators") {
  const Endomorphism c12 = make_generator(GeneratorSpec::parse("c:1,2", 3));
  const Endomorphism m123 = make_generator(GeneratorSpec::parse("m:1,2,3", 3));
  CHECK(apply_endo(c12, w("x1")).to_string() == "x2^-1 x1 x2");
  CHECK(apply_endo(m123, w("x1")) == multiply(w("x1"), commutator(w("x2"), w("x3"))));
  CHECK(apply_endo(Endomorphism::identity(3), w("x3 x1^-1")) == w("x3 x1^-1"));

  gen::Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const FreeWord u = gen::word(rng, 3, 6), v = gen::word(rng, 3, 6);
    CHECK(apply_endo(m123, multiply(u, v)) == multiply(apply_endo(m123, u), apply_endo(m123, v)));
  }
}

TEST_CASE("composition, inverses and abelianization") {
  const Endomorphism c12 = make_generator(GeneratorSpec::parse("c:1,2", 3));
  CHECK(compose(c12, Endomorphism::identity(3)) == c12);
  CHECK(compose(c12, c12.inverse()) == Endomorphism::identity(3));
  CHECK(abelianize(c12) == Matrix::identity(3));

  gen::Rng rng(14);
  const char* specs[] = {"c:1,2", "c:3,1", "m:2,1,3", "E:1,2:3", "B:1:2", "N"};
  for (int t = 0; t < 100; ++t) {
    const Endomorphism a = make_generator(GeneratorSpec::parse(specs[rng() % 6], 3));
    const Endomorphism b = make_generator(GeneratorSpec::parse(specs[rng() % 6], 3));
    const Endomorphism ab = compose(a, b);
    CHECK(abelianize(ab) == abelianize(a) * abelianize(b));
    const Integer det = determinant(abelianize(ab));
    CHECK((det == 1 || det == -1));
    const FreeWord x = gen::word(rng, 3, 5);
    CHECK(ab.apply(x) == a.apply(b.apply(x)));
    CHECK(ab.inverse().apply(ab.apply(x)) == x);
  }
}

TEST_CASE("lifted congruence generators abelianize to their matrices") {
  CHECK(abelianize(make_generator(GeneratorSpec::parse("E:1,2:5", 3))) == sl_E(3, 1, 2, 5));
  CHECK(abelianize(make_generator(GeneratorSpec::parse("N", 3))) == sl_N1(3));
}

TEST_CASE("endomorphism files") {
  const Endomorphism e = Endomorphism::parse("x1 -> x2^-1 x1 x2\nx2 -> x2\n# inverse\nx1 -> x2 x1 x2^-1\nx2 -> x2\n");
  CHECK(e.has_inverse());
  CHECK(e.rank() == 2);
  CHECK(Endomorphism::parse(e.to_string()) == e);
  // a wrong inverse is rejected
  CHECK_THROWS_AS(Endomorphism::parse("x1 -> x2^-1 x1 x2\nx2 -> x2\n# inverse\nx1 -> x1\nx2 -> x2\n"), DomainError);
  CHECK_THROWS_AS(Endomorphism::parse("x1 -> x1\nx1 -> x2\n"), ParseError);
  CHECK_THROWS(Endomorphism::parse("x1 => x1\n"));
}
