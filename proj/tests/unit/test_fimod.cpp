#include <doctest.h>

#include "workbench/error.hpp"
#include "workbench/fimod.hpp"

using namespace workbench;

namespace {

FIModulePresentation make(const char* name, int N) { return builtin(BuiltinSpec::parse(name), N); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("subset keys") {
  CHECK(subset_key(subset_of({3, 1, 4})) == "1,3,4");
  CHECK(subset_key(0).empty());
  CHECK(parse_subset_key("2,5") == subset_of({2, 5}));
  CHECK(parse_subset_key("") == 0);
  CHECK_THROWS_AS(parse_subset_key("1,1"), ParseError);
  CHECK_THROWS_AS(parse_subset_key("1,x"), ParseError);
  CHECK_THROWS_AS(subset_of({13}), DomainError);
}

TEST_CASE("maps of presented groups") {
  const FGAbelian z = FGAbelian::free(1);
  const FGAbelian z2{1, Matrix{{2}}};
  CHECK(z2.structure().to_string() == "Z/2");
  const AbMap doubling{z, z, Matrix{{2}}};
  CHECK(doubling.well_defined());
  CHECK_FALSE(doubling.surjective());
  CHECK(doubling.injective());
  CHECK_FALSE(doubling.iso());
  const AbMap quotient{z, z2, Matrix{{1}}};
  CHECK(quotient.surjective());
  CHECK_FALSE(quotient.injective());
  CHECK_FALSE(quotient.iso());
  const AbMap lift{z2, z, Matrix{{1}}};
  CHECK_FALSE(lift.well_defined());
  const AbMap flip{z2, z2, Matrix{{3}}};
  CHECK(flip.iso());
  CHECK(flip.injective());
  CHECK(maps_agree(Matrix{{1}}, Matrix{{3}}, z2));
  CHECK(direct_sum({z, z2, z2}).structure().to_string() == "Z/2 + Z/2 + Z");
}

TEST_CASE("psi and eta on the constant module") {
  const FIModulePresentation c = make("constant", 4);
  CHECK(psi(c, subset_of({1})).matrix == Matrix{{1}});
  CHECK(eta(c, subset_of({1})).source.ngens == 0);
  CHECK(psi(c, subset_of({1, 2})).matrix == Matrix{{1, 1}});
  CHECK(eta(c, subset_of({1, 2})).matrix == Matrix{{1}, {-1}});
  const StabResult s = central_stabilization(c, subset_of({1, 2}));
  CHECK(s.stab_structure.to_string() == "Z");
  CHECK(s.iso);
  for (Subset J = 1; J <= c.full(); ++J) {
    const Matrix comp = psi(c, J).matrix * eta(c, J).matrix;
    CHECK(maps_agree(comp, Matrix(comp.rows(), comp.cols()), c.group(J)));
  }
  CHECK_THROWS_AS(psi(c, 0), DomainError);
  CHECK_THROWS_AS(psi(c, subset_of({5})), DomainError);
}

TEST_CASE("stabilization of the builtin modules") {
  const FIModulePresentation st = make("standard", 4);
  CHECK_FALSE(central_stabilization(st, subset_of({2})).surjective);
  CHECK(central_stabilization(st, subset_of({1, 2})).iso);
  CHECK(central_stabilization(st, subset_of({1, 3, 4})).iso);

  const FIModulePresentation ext2 = make("exterior:2", 4);
  CHECK(ext2.group(subset_of({1})).structure().is_zero());
  CHECK(ext2.group(subset_of({1, 2, 3})).structure().to_string() == "Z^3");
  CHECK_FALSE(central_stabilization(ext2, subset_of({1, 2})).surjective);
  CHECK(central_stabilization(ext2, subset_of({1, 2, 3})).iso);

  for (int k = 1; k <= 2; ++k) {
    const FIModulePresentation tw = builtin(BuiltinSpec{BuiltinKind::tensor_wedge, k}, 3);
    for (Subset I = 0; I <= tw.full(); ++I) {
      const std::size_t h = 2 * subset_size(I);
      CHECK(tw.group(I).structure().free_rank == h * binomial(h, k));
    }
  }
}

TEST_CASE("generation degree and stability start") {
  const std::pair<const char*, int> expected[] = {{"constant", 0}, {"standard", 1}, {"exterior:2", 2}, {"tensor_wedge:1", 2}};
  for (const auto& [name, d] : expected) {
    INFO(name);
    const FIModulePresentation m = make(name, 5);
    CHECK(validate(m).valid);
    const SweepValue gd = generation_degree(m);
    CHECK(gd.value == d);
    CHECK_FALSE(gd.at_least);
    const StabilityTable t = stability_start(m);
    CHECK(t.start.value == d);
    CHECK(t.rows.size() == (std::size_t{1} << 5) - 1);
  }
  // [N] too small to see any stable range
  const SweepValue w = generation_degree(make("standard", 1));
  CHECK(w.to_string() == ">= 1");
  CHECK(stability_start(make("standard", 1)).start.to_string() == ">= 1");
}

TEST_CASE("validation catches a corrupted step map") {
  FIModulePresentation st = make("standard", 3);
  const Subset one = subset_of({1});
  st.set_step(one, 2, Matrix{{2}, {0}});
  const ValidationReport r = validate(st);
  CHECK_FALSE(r.valid);
  CHECK_FALSE(r.violation.empty());

  FIModulePresentation c = make("constant", 3);
  c.set_transposition(subset_of({1, 2}), 1, Matrix{{-1}});
  CHECK_FALSE(validate(c).valid);
}

TEST_CASE("inclusion orders agree on valid modules") {
  const FIModulePresentation m = make("exterior:2", 4);
  CHECK(m.inclusion_along(0, {4, 2, 1}) == m.inclusion(0, subset_of({1, 2, 4})));
  CHECK(m.inclusion(subset_of({1, 2}), subset_of({1, 2})) == Matrix::identity(1));
  CHECK_THROWS_AS(m.inclusion(subset_of({3}), subset_of({1})), DomainError);
}

TEST_CASE("JSON round trip and malformed input") {
  for (const char* name : {"constant", "standard", "exterior:2", "tensor_wedge:1"}) {
    const FIModulePresentation m = make(name, 3);
    const auto doc = m.to_json();
    const FIModulePresentation back = FIModulePresentation::parse(doc.dump());
    CHECK(back.to_json() == doc);
    CHECK(generation_degree(back).value == generation_degree(m).value);
  }
  const FIModulePresentation d = doubled_standard(2);
  CHECK(FIModulePresentation::from_json(d.to_json()).to_json() == d.to_json());

  CHECK_THROWS_AS(FIModulePresentation::parse("{"), ParseError);
  CHECK_THROWS_AS(FIModulePresentation::parse(R"({"groups": {}})"), ParseError);
  CHECK_THROWS_AS(FIModulePresentation::parse(R"({"N": 1, "groups": {"": {"ngens": 1, "relations": []}}})"), ParseError);

  auto doc = make("constant", 2).to_json();
  doc["step_maps"].erase(doc["step_maps"].begin());
  CHECK_THROWS_AS(FIModulePresentation::from_json(doc), ParseError);
  doc = make("constant", 2).to_json();
  doc["step_maps"]["1->3"] = nlohmann::json::array({nlohmann::json::array({1})});
  CHECK_THROWS_AS(FIModulePresentation::from_json(doc), ParseError);
}

TEST_CASE("morphisms") {
  const int N = 4;
  const FIModulePresentation c = make("constant", N), st = make("standard", N), dbl = doubled_standard(N);
  CHECK(validate(dbl).valid);
  CHECK(generation_degree(dbl).value == 1);
  const FIMorphism sum = sum_morphism(st, c), fold = fold_morphism(dbl, st);
  CHECK(validate_morphism(st, c, sum).valid);
  CHECK(validate_morphism(dbl, st, fold).valid);
  for (Subset J = 1; J <= st.full(); ++J) {
    const AbMap f = component(dbl, st, fold, J);
    CHECK(f.iso());
    CHECK(f.injective());
    const InducedStab s = induced_stab_map(dbl, st, fold, J);
    CHECK(s.well_defined);
    CHECK(s.commutes);
  }
  // sum is not natural if we flip one component
  FIMorphism broken = sum;
  broken.maps[subset_of({1, 2})] = Matrix{{1, -1}};
  CHECK_FALSE(validate_morphism(st, c, broken).valid);
}
