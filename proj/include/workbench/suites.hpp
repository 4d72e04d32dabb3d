#pragma once

// Verification suites: exact checks over parameter grids and seeded samples.
// Each function appends its records to a report; names are stable so that
// reports from different runs can be diffed.

#include <cstdint>
#include <string>
#include <vector>

#include "workbench/fimod.hpp"
#include "workbench/report.hpp"

namespace workbench {

struct SuiteParams {
  int kmax = 6;             // lower-bound certificates, k = 1..kmax, n = k+1
  int symplectic_kmax = 3;  // symplectic certificates, g = k+1
  int gmax = 3;             // Lie rank, g = 2..gmax
  int nmax = 5;             // generator lifts, n = 3..nmax
  std::vector<long> primes{2, 3, 5};
  int fi_N = 6;
  std::uint64_t seed = 7;
  int kernel_samples = 200;
  int splitting_samples = 100;
  int inner_samples = 50;
  int pp_samples = 100;
};

void check_lower_bound(Report& r, int kmax);
void check_symplectic_certificates(Report& r, int kmax);
/// tau_k(phi) = 0 iff ia_weight(phi) >= k+1, n <= 5, k <= 3.
void check_tau_kernel(Report& r, std::uint64_t seed, int samples);
/// tau_hat_k(phi) = 0 for phi supported on fewer than k indices, k <= 4.
void check_splitting(Report& r, std::uint64_t seed, int samples);
/// tau_k(conjugation by w) = ad of the class of w, w in gamma_k, k <= 4, n <= 4.
void check_inner(Report& r, std::uint64_t seed, int samples);
/// PP(mu1)(mu2) = [mu1, mu2] on the isotropic span, deg mu1 + deg mu2 <= 6, g <= 4.
void check_pp(Report& r, std::uint64_t seed, int samples);
/// Lyndon counts against the necklace formula and PBW independence, n <= nmax, k <= kmax.
void check_witt(Report& r, int nmax, int kmax);
void check_lie_rank(Report& r, int gmin, int gmax, const std::vector<long>& primes);
void check_lifts(Report& r, int nmin, int nmax, const std::vector<long>& primes);
void check_sp_generators(Report& r, int gmax, const std::vector<long>& primes);

/// The builtin modules swept by the FI suite.
std::vector<BuiltinSpec> fi_sweep_modules();
/// psi o eta = 0, surjectivity above the generation degree, finite stability
/// start, stability start >= generation degree.
void check_fi_module(Report& r, const BuiltinSpec& spec, int N);
/// Functoriality of Stab along the standard -> constant sum, and the
/// bootstrapping scenario for doubled_standard -> standard.
void check_fi_morphisms(Report& r, int N);

/// Necklace count (1/k) sum_{d | k} mu(d) n^{k/d}.
std::int64_t necklace_count(int n, int k);

/// lowerbound | levelp | fistab | properties | all.
Report run_suite(const std::string& name, const SuiteParams& params);

}  // namespace workbench
