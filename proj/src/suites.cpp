#include "workbench/suites.hpp"

#include <algorithm>
#include <random>

#include "workbench/congruence.hpp"
#include "workbench/error.hpp"
#include "workbench/freelie.hpp"
#include "workbench/johnson.hpp"
#include "workbench/magnus.hpp"
#include "workbench/parallel.hpp"
#include "workbench/snf.hpp"
#include "workbench/words.hpp"

namespace workbench {

namespace {

std::string pad(int v) { return (v < 10 ? "0" : "") + std::to_string(v); }

int draw(std::mt19937_64& rng, int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }

std::vector<int> draw_support(std::mt19937_64& rng, int n, int size) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  for (int i = 0; i < size; ++i) std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(draw(rng, i, n - 1))]);
  pool.resize(static_cast<std::size_t>(size));
  std::sort(pool.begin(), pool.end());
  return pool;
}

FreeWord random_word(std::mt19937_64& rng, int n, int max_len) {
  for (;;) {
    std::vector<Letter> letters;
    const int len = draw(rng, 1, max_len);
    for (int i = 0; i < len; ++i) {
      const int g = draw(rng, 1, n);
      letters.push_back(static_cast<Letter>(rng() % 2 ? g : -g));
    }
    FreeWord w = FreeWord::reduce(letters, n);
    if (!w.empty()) return w;
  }
}

nlohmann::json support_json(const std::vector<int>& s) { return nlohmann::json(s); }

// Per-sample seeds drawn up front so that workers can run in any order.
std::vector<std::uint64_t> sample_seeds(std::uint64_t seed, std::uint64_t salt, int samples) {
  std::mt19937_64 rng(seed ^ (salt * 0x9e3779b97f4a7c15ULL));
  std::vector<std::uint64_t> out(static_cast<std::size_t>(std::max(samples, 0)));
  for (auto& s : out) s = rng();
  return out;
}

// Aggregates per-sample outcomes into one record per group, keeping the first failure.
struct Tally {
  struct Group {
    int total = 0, failed = 0;
    nlohmann::json first_failure;
    nlohmann::json stats = nlohmann::json::object();
  };
  std::map<std::string, Group> groups;

  void add(const std::string& group, bool ok, const nlohmann::json& witness, const std::string& stat = "") {
    Group& g = groups[group];
    ++g.total;
    if (!stat.empty()) g.stats[stat] = g.stats.value(stat, 0) + 1;
    if (!ok && g.failed++ == 0) g.first_failure = witness;
  }
  void emit(Report& r) const {
    for (const auto& [name, g] : groups) {
      nlohmann::json w = {{"samples", g.total}, {"failed", g.failed}};
      if (!g.stats.empty()) w["outcomes"] = g.stats;
      if (g.failed) w["first_failure"] = g.first_failure;
      r.add(name, g.failed == 0, w);
    }
  }
};

struct Sample {
  std::string group;
  bool ok = false;
  nlohmann::json witness;
  std::string stat;
};

template <class Fn>
void run_samples(Report& r, const std::vector<std::uint64_t>& seeds, Fn&& fn) {
  std::vector<Sample> results(seeds.size());
  parallel_for(seeds.size(), [&](std::size_t i) {
    try {
      results[i] = fn(seeds[i]);
    } catch (const Error& e) {
      results[i].group = "error";
      results[i].ok = false;
      results[i].witness = {{"sample_seed", seeds[i]}, {"error", e.what()}};
    }
  });
  Tally t;
  for (const auto& s : results) t.add(s.group, s.ok, s.witness, s.stat);
  t.emit(r);
}

}  // namespace

// --- Johnson certificates ---------------------------------------------------------

void check_lower_bound(Report& r, int kmax) {
  std::vector<Certificate> certs(static_cast<std::size_t>(std::max(kmax, 0)));
  parallel_for(certs.size(), [&](std::size_t i) {
    const int k = static_cast<int>(i) + 1;
    certs[i] = certificate_lower_bound(k + 1, k);
  });
  for (const auto& c : certs) {
    nlohmann::json w = {{"n", c.n}, {"k", c.k}, {"contraction", c.contraction}, {"nonzero", c.nonzero},
                        {"matches_bracket", c.matches_bracket}, {"wedge_ok", c.wedge_ok}};
    if (!c.pass) {
      w["failure"] = c.failure;
      w["w_lambda"] = c.w_lambda;
      w["rho_image"] = c.rho_image;
    }
    r.add("lowerbound/k=" + pad(c.k), c.pass, w);
  }
}

void check_symplectic_certificates(Report& r, int kmax) {
  std::vector<SymplecticCertificate> certs(static_cast<std::size_t>(std::max(kmax, 0)));
  parallel_for(certs.size(), [&](std::size_t i) {
    const int k = static_cast<int>(i) + 1;
    certs[i] = certificate_symplectic(k + 1, k);
  });
  for (const auto& c : certs) {
    nlohmann::json w = {{"g", c.g}, {"k", c.k}, {"nonzero", c.nonzero}, {"matches_bracket", c.matches_bracket}};
    if (!c.pass) {
      w["failure"] = c.failure;
      w["pp_image"] = c.pp_image;
    }
    r.add("symplectic/k=" + pad(c.k), c.pass, w);
  }
}

// --- sampled Johnson properties -----------------------------------------------------

void check_tau_kernel(Report& r, std::uint64_t seed, int samples) {
  run_samples(r, sample_seeds(seed, 1, samples), [](std::uint64_t s) {
    std::mt19937_64 rng(s);
    const int n = draw(rng, 2, 5);
    const int k = draw(rng, 1, 3);
    const auto support = draw_support(rng, n, draw(rng, 2, n));
    // depth k lands in IA(k); depth k+1 should sit in the kernel of tau_k
    const int depth = k + draw(rng, 0, 1);
    const Endomorphism phi = ia_commutator_sampler(n, support, depth, rng);
    const bool tau_zero = tau(phi, k).is_zero();
    const bool deep = ia_weight(phi, k + 2).reaches(k + 1);
    Sample out;
    out.group = "tau_kernel/k=" + std::to_string(k);
    out.ok = tau_zero == deep;
    out.stat = tau_zero ? "kernel" : "nonzero";
    out.witness = {{"sample_seed", s}, {"n", n}, {"k", k}, {"support", support_json(support)}, {"depth", depth},
                   {"tau_zero", tau_zero}, {"weight_at_least_k+1", deep}};
    return out;
  });
}

void check_splitting(Report& r, std::uint64_t seed, int samples) {
  run_samples(r, sample_seeds(seed, 2, samples), [](std::uint64_t s) {
    std::mt19937_64 rng(s);
    const int k = draw(rng, 3, 4);
    const int size = draw(rng, 2, k - 1);
    const int n = draw(rng, std::max(size, 3), 5);
    const auto support = draw_support(rng, n, size);
    const Endomorphism phi = ia_commutator_sampler(n, support, k, rng);
    const auto images = tau_hat(phi, k);
    const bool zero = std::all_of(images.begin(), images.end(), [](const WedgeTensor& t) { return t.is_zero(); });
    Sample out;
    out.group = "splitting/k=" + std::to_string(k);
    out.ok = zero;
    out.witness = {{"sample_seed", s}, {"n", n}, {"k", k}, {"support", support_json(support)}};
    if (!zero) out.witness["phi"] = phi.to_string();
    return out;
  });
}

void check_inner(Report& r, std::uint64_t seed, int samples) {
  run_samples(r, sample_seeds(seed, 3, samples), [](std::uint64_t s) {
    std::mt19937_64 rng(s);
    const int k = draw(rng, 1, 4);
    const int n = draw(rng, 2, 4);
    std::vector<FreeWord> parts;
    for (int i = 0; i < k; ++i) parts.push_back(random_word(rng, n, 3 - (k > 2)));
    const FreeWord w = left_normed_commutator(parts);
    const JohnsonValue value = tau(Endomorphism::conjugation(w), k);
    const TruncatedSeries series = expand(w, k);
    const LieElement lambda = lie_project(homogeneous_tensor(series, k));
    const GradedDerivation expected = inner_derivation(lambda);
    Sample out;
    out.group = "inner/k=" + std::to_string(k);
    out.ok = value.derivation == expected;
    out.stat = lambda.is_zero() ? "deeper" : "leading";
    out.witness = {{"sample_seed", s}, {"n", n}, {"k", k}, {"w", w.to_string()}};
    if (!out.ok) {
      out.witness["tau"] = value.derivation.to_string();
      out.witness["expected"] = expected.to_string();
    }
    return out;
  });
}

void check_pp(Report& r, std::uint64_t seed, int samples) {
  run_samples(r, sample_seeds(seed, 4, samples), [](std::uint64_t s) {
    std::mt19937_64 rng(s);
    const int g = draw(rng, 2, 4);
    const int d1 = draw(rng, 1, 5);
    const int d2 = draw(rng, 1, 6 - d1);
    const BasisContext ctx = BasisContext::symplectic_genus(g);
    auto random_isotropic = [&](int degree) {
      LieElement mu(ctx, degree);
      const int terms = draw(rng, 1, 2);
      for (int t = 0; t < terms; ++t) {
        IndexWord idx;
        for (int i = 0; i < degree; ++i) idx.push_back(ctx.a(draw(rng, 1, g)));
        // [a_i, a_i] kills the whole term
        if (degree >= 2 && idx[0] == idx[1]) idx[1] = ctx.a(idx[0] % g + 1);
        const int c = draw(rng, 1, 2) * (rng() % 2 ? 1 : -1);
        mu += left_normed(ctx, idx) * Integer(c);
      }
      return mu;
    };
    const LieElement mu1 = random_isotropic(d1);
    const LieElement mu2 = random_isotropic(d2);
    const LieElement lhs = derivation_apply(pp(mu1), mu2);
    const LieElement rhs = bracket(mu1, mu2);
    Sample out;
    out.group = "pp/degree=" + std::to_string(d1 + d2);
    out.ok = lhs == rhs;
    out.stat = rhs.is_zero() ? "zero" : "nonzero";
    out.witness = {{"sample_seed", s}, {"g", g}, {"mu1", mu1.to_string()}, {"mu2", mu2.to_string()}};
    if (!out.ok) out.witness["pp"] = lhs.to_string();
    return out;
  });
}

// --- Witt dimensions -----------------------------------------------------------------

std::int64_t necklace_count(int n, int k) {
  auto mobius = [](int d) {
    int m = 1;
    for (int p = 2; p * p <= d; ++p)
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0;
        m = -m;
      }
    return d > 1 ? -m : m;
  };
  std::int64_t sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    std::int64_t power = 1;
    for (int i = 0; i < k / d; ++i) power *= n;
    sum += mobius(d) * power;
  }
  return sum / k;
}

void check_witt(Report& r, int nmax, int kmax) {
  for (int n = 1; n <= nmax; ++n)
    for (int k = 1; k <= kmax; ++k) {
      const BasisContext ctx(n);
      const auto words = lyndon_words(n, k);
      const std::int64_t expected = necklace_count(n, k);
      // PBW images as columns over the n^k monomials
      std::map<IndexWord, std::size_t> row_of;
      std::vector<HomTensor> images;
      for (const auto& w : words) {
        images.push_back(pbw_of_lyndon(ctx, w));
        for (const auto& [m, c] : images.back().terms()) row_of.try_emplace(m, row_of.size());
      }
      Matrix columns(row_of.size(), words.size());
      for (std::size_t c = 0; c < images.size(); ++c)
        for (const auto& [m, v] : images[c].terms()) columns(row_of.at(m), c) = v;
      const std::size_t rank = words.empty() ? 0 : invariant_factors(columns).size();
      const bool ok = static_cast<std::int64_t>(words.size()) == expected && rank == words.size();
      r.add("witt/n=" + std::to_string(n) + "/k=" + pad(k), ok,
            {{"lyndon", words.size()}, {"necklace", expected}, {"pbw_rank", rank}});
    }
}

// --- congruence ----------------------------------------------------------------------

void check_lie_rank(Report& r, int gmin, int gmax, const std::vector<long>& primes) {
  for (int g = gmin; g <= gmax; ++g)
    for (long p : primes) {
      const LieRankResult res = lie_rank_certificate(g, p);
      nlohmann::json w = {{"g", g}, {"p", p}, {"rank", res.rank}, {"expected", res.expected}, {"generators", res.generators}};
      if (!res.dependent.empty()) w["dependent"] = res.dependent;
      r.add("lie_rank/g=" + std::to_string(g) + "/p=" + std::to_string(p), res.pass(), w);
    }
}

void check_lifts(Report& r, int nmin, int nmax, const std::vector<long>& primes) {
  for (int n = nmin; n <= nmax; ++n)
    for (long p : primes) {
      const LiftReport rep = sl_lift_check(n, p);
      nlohmann::json failures = nlohmann::json::array();
      for (const auto& rec : rep.records)
        if (!rec.pass())
          failures.push_back({{"generator", rec.name}, {"matches", rec.matches}, {"level", rec.level}, {"witness", rec.witness}});
      nlohmann::json w = {{"n", n}, {"p", p}, {"generators", rep.records.size()}};
      if (!failures.empty()) w["failures"] = failures;
      r.add("lift/n=" + std::to_string(n) + "/p=" + std::to_string(p), rep.pass(), w);
    }
}

void check_sp_generators(Report& r, int gmax, const std::vector<long>& primes) {
  for (int g = 1; g <= gmax; ++g) {
    const SymplecticContext ctx(g);
    for (long p : primes) {
      nlohmann::json failures = nlohmann::json::array();
      const auto gens = sp_generators(g, p);
      for (const auto& gen : gens) {
        const bool sym = is_symplectic(gen.matrix, ctx);
        const bool level = is_level(gen.matrix, p);
        const bool lie = sym && level && in_sp_lie(congruence_log(gen.matrix, p), ctx, p);
        if (!(sym && level && lie))
          failures.push_back({{"generator", gen.name}, {"symplectic", sym}, {"level", level}, {"lie", lie}});
      }
      nlohmann::json w = {{"g", g}, {"p", p}, {"generators", gens.size()}};
      if (!failures.empty()) w["failures"] = failures;
      r.add("sp_generators/g=" + std::to_string(g) + "/p=" + std::to_string(p), failures.empty(), w);
    }
  }
}

// --- FI-modules ------------------------------------------------------------------------

std::vector<BuiltinSpec> fi_sweep_modules() {
  return {BuiltinSpec::parse("constant"),       BuiltinSpec::parse("standard"),      BuiltinSpec::parse("exterior:2"),
          BuiltinSpec::parse("exterior:3"),     BuiltinSpec::parse("tensor_wedge:1"), BuiltinSpec::parse("tensor_wedge:2")};
}

void check_fi_module(Report& r, const BuiltinSpec& spec, int N) {
  const std::string base = "fi/" + spec.name() + "/N=" + std::to_string(N) + "/";
  const FIModulePresentation m = builtin(spec, N);
  const ValidationReport v = validate(m);
  r.add(base + "valid", v.valid, {{"checks", v.checks}, {"violation", v.violation}});
  if (!v.valid) return;

  const SweepValue gen = generation_degree(m);
  const StabilityTable table = stability_start(m);

  std::vector<Subset> subsets;
  for (const auto& row : table.rows) subsets.push_back(row.J);
  std::vector<char> composite_zero(subsets.size());
  parallel_for(subsets.size(), [&](std::size_t i) {
    const AbMap p = psi(m, subsets[i]);
    const AbMap e = eta(m, subsets[i]);
    composite_zero[i] = maps_agree(p.matrix * e.matrix, Matrix(p.target.ngens, e.source.ngens), p.target);
  });
  nlohmann::json bad_composite = nlohmann::json::array(), bad_surjective = nlohmann::json::array();
  nlohmann::json table_json = nlohmann::json::object();
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const StabResult& row = table.rows[i];
    if (!composite_zero[i]) bad_composite.push_back(subset_key(row.J));
    if (!gen.at_least && gen.value < subset_size(row.J) && !row.surjective) bad_surjective.push_back(subset_key(row.J));
    const std::string size = std::to_string(subset_size(row.J));
    // every J of one size gives the same answer for a symmetric module; record the first
    if (!table_json.contains(size))
      table_json[size] = {{"J", subset_key(row.J)}, {"iso", row.iso}, {"stab", row.stab_structure.to_string()},
                          {"target", row.target_structure.to_string()}};
  }
  r.add(base + "psi_eta_zero", bad_composite.empty(), {{"subsets", subsets.size()}, {"failing", bad_composite}});
  r.add(base + "surjective_above_generation", bad_surjective.empty(),
        {{"generation_degree", gen.to_string()}, {"failing", bad_surjective}});
  r.add(base + "stability_finite", !table.start.at_least,
        {{"stability_start", table.start.to_string()}, {"by_size", table_json}});
  const bool ordered = table.start.at_least || gen.at_least || table.start.value >= gen.value;
  r.add(base + "stability_ge_generation", ordered,
        {{"stability_start", table.start.to_string()}, {"generation_degree", gen.to_string()}});
}

void check_fi_morphisms(Report& r, int N) {
  const std::string base = "fi/morphism/N=" + std::to_string(N) + "/";
  const auto standard = builtin(BuiltinSpec::parse("standard"), N);
  const auto constant = builtin(BuiltinSpec::parse("constant"), N);
  const auto doubled = doubled_standard(N);

  auto functorial = [&](const std::string& name, const FIModulePresentation& v, const FIModulePresentation& w,
                        const FIMorphism& f) {
    const ValidationReport vr = validate_morphism(v, w, f);
    r.add(base + name + "/natural", vr.valid, {{"checks", vr.checks}, {"violation", vr.violation}});
    nlohmann::json failing = nlohmann::json::array();
    for (Subset J = 1; J <= v.full(); ++J) {
      const InducedStab s = induced_stab_map(v, w, f, J);
      if (!s.well_defined || !s.commutes)
        failing.push_back({{"J", subset_key(J)}, {"well_defined", s.well_defined}, {"commutes", s.commutes}});
    }
    r.add(base + name + "/induced_stab", failing.empty(), {{"failing", failing}});
  };
  functorial("sum", standard, constant, sum_morphism(standard, constant));
  const FIMorphism fold = fold_morphism(doubled, standard);
  functorial("fold", doubled, standard, fold);

  // Bootstrapping: V generated in degree E, W stable from E, Psi iso up to E.
  const SweepValue gen_v = generation_degree(doubled);
  const SweepValue start_w = stability_start(standard).start;
  const int E = gen_v.value;
  bool hypotheses = !gen_v.at_least && !start_w.at_least && start_w.value <= E;
  nlohmann::json low = nlohmann::json::array(), high = nlohmann::json::array();
  for (Subset J = 0; J <= standard.full(); ++J) {
    const AbMap psi_J = component(doubled, standard, fold, J);
    const bool iso = psi_J.iso();
    const bool exact = psi_J.surjective() && psi_J.injective();
    if (iso != exact) hypotheses = false;
    if (subset_size(J) <= E) {
      if (!iso) low.push_back(subset_key(J));
    } else if (!iso) {
      high.push_back(subset_key(J));
    }
  }
  hypotheses = hypotheses && low.empty();
  r.add(base + "bootstrap/hypotheses", hypotheses,
        {{"generation_degree_V", gen_v.to_string()}, {"stability_start_W", start_w.to_string()}, {"not_iso", low}});
  r.add(base + "bootstrap/conclusion", hypotheses && high.empty(), {{"E", E}, {"not_iso", high}});
}

// --- suites ----------------------------------------------------------------------------

namespace {

nlohmann::json primes_json(const std::vector<long>& primes) { return nlohmann::json(primes); }

void lowerbound(Report& r, const SuiteParams& p) {
  check_lower_bound(r, p.kmax);
  check_symplectic_certificates(r, p.symplectic_kmax);
}

void levelp(Report& r, const SuiteParams& p) {
  check_lie_rank(r, 2, p.gmax, p.primes);
  check_sp_generators(r, p.gmax, p.primes);
  check_lifts(r, 3, p.nmax, p.primes);
}

void fistab(Report& r, const SuiteParams& p) {
  for (const auto& spec : fi_sweep_modules()) check_fi_module(r, spec, p.fi_N);
  check_fi_morphisms(r, p.fi_N);
}

void properties(Report& r, const SuiteParams& p) {
  check_tau_kernel(r, p.seed, p.kernel_samples);
  check_splitting(r, p.seed, p.splitting_samples);
  check_inner(r, p.seed, p.inner_samples);
  check_pp(r, p.seed, p.pp_samples);
  check_witt(r, 3, 6);
}

}  // namespace

Report run_suite(const std::string& name, const SuiteParams& p) {
  nlohmann::json params;
  if (name == "lowerbound" || name == "all") params["kmax"] = p.kmax, params["symplectic_kmax"] = p.symplectic_kmax;
  if (name == "levelp" || name == "all") params["gmax"] = p.gmax, params["nmax"] = p.nmax, params["primes"] = primes_json(p.primes);
  if (name == "fistab" || name == "all") params["N"] = p.fi_N;
  if (name == "properties" || name == "all") params["seed"] = p.seed;
  Report r("suite " + name, params);
  if (name == "lowerbound")
    lowerbound(r, p);
  else if (name == "levelp")
    levelp(r, p);
  else if (name == "fistab")
    fistab(r, p);
  else if (name == "properties")
    properties(r, p);
  else if (name == "all") {
    lowerbound(r, p);
    levelp(r, p);
    fistab(r, p);
    properties(r, p);
  } else {
    throw DomainError("unknown suite '" + name + "' (lowerbound, levelp, fistab, properties, all)");
  }
  return r;
}

}  // namespace workbench
