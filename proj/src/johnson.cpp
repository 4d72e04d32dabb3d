#include "workbench/johnson.hpp"

#include <algorithm>
#include <sstream>

#include "workbench/error.hpp"

namespace workbench {

namespace {

FreeWord x(int rank, int i) { return FreeWord::generator(rank, i); }

FreeWord xinv(int rank, int i) { return invert(FreeWord::generator(rank, i)); }

std::vector<FreeWord> identity_images(int rank) {
  std::vector<FreeWord> v;
  for (int i = 1; i <= rank; ++i) v.push_back(x(rank, i));
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

bool distinct(const std::vector<int>& v) {
  std::vector<int> s = v;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

// --- generators -------------------------------------------------------------

GeneratorSpec GeneratorSpec::parse(const std::string& text, int rank) {
  GeneratorSpec spec;
  spec.rank = rank;
  if (text.empty()) throw ParseError("empty generator spec");
  switch (text[0]) {
    case 'c': spec.kind = GeneratorKind::c; break;
    case 'm': spec.kind = GeneratorKind::m; break;
    case 'E': spec.kind = GeneratorKind::E; break;
    case 'B': spec.kind = GeneratorKind::B; break;
    case 'N': spec.kind = GeneratorKind::N; break;
    default: throw ParseError("unknown generator kind in '" + text + "'");
  }
  std::vector<std::string> fields;
  std::stringstream ss(text.substr(1));
  std::string field;
  while (std::getline(ss, field, ':'))
    if (!field.empty()) fields.push_back(field);
  try {
    if (!fields.empty()) {
      std::stringstream is(fields[0]);
      std::string idx;
      while (std::getline(is, idx, ',')) spec.indices.push_back(std::stoi(idx));
    }
    if (fields.size() > 1) spec.level = std::stol(fields[1]);
  } catch (const std::exception&) {
    throw ParseError("malformed generator spec '" + text + "'");
  }
  if (fields.size() > 2) throw ParseError("malformed generator spec '" + text + "'");
  if (spec.kind == GeneratorKind::N && spec.indices.empty()) spec.indices = {1};
  make_generator(spec);  // range and arity checks
  return spec;
}

std::string GeneratorSpec::to_string() const {
  static const char* names = "cmEBN";
  std::string out(1, names[static_cast<int>(kind)]);
  if (kind == GeneratorKind::N) return out;
  out += ':';
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices[i]);
  }
  if (kind == GeneratorKind::E || kind == GeneratorKind::B) out += ':' + std::to_string(level);
  return out;
}

Endomorphism make_generator(const GeneratorSpec& spec) {
  const int n = spec.rank;
  require(n >= 1, "generator rank must be positive");
  for (int i : spec.indices) require(i >= 1 && i <= n, "generator index out of range in " + spec.to_string());
  require(distinct(spec.indices), "generator indices must be distinct in " + spec.to_string());
  auto images = identity_images(n);
  auto inverse = identity_images(n);
  const auto& ix = spec.indices;
  switch (spec.kind) {
    case GeneratorKind::c: {
      require(ix.size() == 2, "c needs two indices");
      const int i = ix[0], j = ix[1];
      images[i - 1] = conjugate(x(n, i), x(n, j));
      inverse[i - 1] = conjugate(x(n, i), xinv(n, j));
      break;
    }
    case GeneratorKind::m: {
      require(ix.size() == 3, "m needs three indices");
      const int i = ix[0], j = ix[1], k = ix[2];
      images[i - 1] = multiply(x(n, i), commutator(x(n, j), x(n, k)));
      inverse[i - 1] = multiply(x(n, i), commutator(x(n, k), x(n, j)));
      break;
    }
    case GeneratorKind::E: {
      require(ix.size() == 2, "E needs two indices");
      const int i = ix[0], j = ix[1];
      images[j - 1] = multiply(x(n, j), power(x(n, i), spec.level));
      inverse[j - 1] = multiply(x(n, j), power(x(n, i), -spec.level));
      break;
    }
    case GeneratorKind::B: {
      require(ix.size() == 1, "B needs one index");
      const int i = ix[0];
      require(i < n, "B needs i < n");
      const FreeWord u = multiply(x(n, i), xinv(n, i + 1));
      const FreeWord up = power(u, spec.level);
      const FreeWord um = power(u, -spec.level);
      images[i - 1] = multiply(x(n, i), up);
      images[i] = multiply(x(n, i + 1), up);
      inverse[i - 1] = multiply(x(n, i), um);
      inverse[i] = multiply(x(n, i + 1), um);
      break;
    }
    case GeneratorKind::N: {
      require(ix.size() == 1 && ix[0] == 1, "N acts on x1 only");
      images[0] = xinv(n, 1);
      inverse[0] = xinv(n, 1);
      break;
    }
  }
  return Endomorphism(std::move(images), std::move(inverse));
}

// --- filtration weights -----------------------------------------------------

namespace {

FreeWord defect(const Endomorphism& phi, int i) {
  return multiply(phi.image(i), xinv(phi.rank(), i));
}

FiltrationWeight ia_from(const Endomorphism& phi, int cap, long p) {
  int best = cap + 1;
  for (int i = 1; i <= phi.rank(); ++i) {
    const FreeWord d = defect(phi, i);
    const FiltrationWeight w = p == 0 ? lcs_weight(d, cap) : zassenhaus_weight(d, p, cap);
    if (!w.at_least) best = std::min(best, w.value);
    if (best == 1) break;
  }
  if (best <= cap) return {best - 1, false};
  return {cap, true};
}

}  // namespace

FiltrationWeight ia_weight(const Endomorphism& phi, int cap) {
  if (cap < 1) throw DomainError("degree cap must be >= 1");
  return ia_from(phi, cap, 0);
}

FiltrationWeight ia_weight_zassenhaus(const Endomorphism& phi, long p, int cap) {
  if (cap < 1) throw DomainError("degree cap must be >= 1");
  if (!is_prime(p)) throw DomainError("ia_weight_zassenhaus needs a prime, got " + std::to_string(p));
  return ia_from(phi, cap, p);
}

// --- tau --------------------------------------------------------------------

bool JohnsonValue::is_zero() const {
  return std::all_of(tensor_form.begin(), tensor_form.end(), [](const HomTensor& t) { return t.is_zero(); });
}

std::string JohnsonValue::to_string() const { return derivation.to_string(); }

JohnsonValue tau(const Endomorphism& phi, int k, int cap) {
  if (k < 1) throw DomainError("tau needs k >= 1");
  if (cap == 0) cap = k + 2;
  if (cap < k + 1) throw DomainError("tau_k needs a cap of at least k+1");
  const int n = phi.rank();
  const BasisContext ctx(n);
  JohnsonValue out;
  out.k = k;
  std::vector<LieElement> images;
  for (int i = 1; i <= n; ++i) {
    const TruncatedSeries s = expand(defect(phi, i), cap, 0);
    const auto low = s.lowest_positive_degree();
    if (low && *low <= k)
      throw DomainError("not in IA_n(" + std::to_string(k) + "): x" + std::to_string(i) + " moves in degree " +
                        std::to_string(*low));
    HomTensor t = homogeneous_tensor(s, k + 1);
    images.push_back(lie_project(t));
    out.tensor_form.push_back(std::move(t));
  }
  out.derivation = GradedDerivation(ctx, k, std::move(images));
  return out;
}

std::vector<WedgeTensor> tau_hat(const JohnsonValue& value) {
  std::vector<WedgeTensor> out;
  for (const auto& im : value.derivation.images()) out.push_back(rho_truncate(im));
  return out;
}

std::vector<WedgeTensor> tau_hat(const Endomorphism& phi, int k, int cap) { return tau_hat(tau(phi, k, cap)); }

// --- sampler ----------------------------------------------------------------

namespace {

Endomorphism random_magnus_generator(int rank, std::span<const int> support, std::mt19937_64& rng) {
  GeneratorSpec spec;
  spec.rank = rank;
  const bool triple = support.size() >= 3 && rng() % 2 == 1;
  std::vector<int> pool(support.begin(), support.end());
  const std::size_t count = triple ? 3 : 2;
  for (std::size_t j = 0; j < count; ++j) {
    const std::size_t at = static_cast<std::size_t>(rng() % pool.size());
    spec.indices.push_back(pool[at]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
  }
  spec.kind = triple ? GeneratorKind::m : GeneratorKind::c;
  Endomorphism g = make_generator(spec);
  return rng() % 2 == 1 ? g.inverse() : g;
}

// Balanced bracketing: a depth-k element is [A, B] with A of depth ceil(k/2)
// and B of depth floor(k/2). Image lengths grow roughly like the product of
// the factors' lengths, which keeps depth 4 near 10^4 letters where the
// left-normed shape reaches 10^7.
Endomorphism balanced_commutator(int rank, std::span<const int> support, int k, std::mt19937_64& rng) {
  if (k == 1) return random_magnus_generator(rank, support, rng);
  const int left = (k + 1) / 2;
  Endomorphism a = balanced_commutator(rank, support, left, rng);
  Endomorphism b = balanced_commutator(rank, support, k - left, rng);
  return commutator(a, b);
}

}  // namespace

Endomorphism ia_commutator_sampler(int rank, std::span<const int> support, int k, std::mt19937_64& rng) {
  if (k < 1) throw DomainError("sampler needs k >= 1");
  std::vector<int> s(support.begin(), support.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.size() < 2) throw DomainError("sampler needs a support of at least two indices");
  for (int i : s)
    if (i < 1 || i > rank) throw DomainError("sampler support index out of range");
  return balanced_commutator(rank, s, k, rng);
}

Endomorphism ia_commutator_sampler(int rank, std::span<const int> support, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return ia_commutator_sampler(rank, support, k, rng);
}

// --- certificates -----------------------------------------------------------

namespace {

std::string one_line(std::string s) {
  std::string out;
  for (char ch : s) {
    if (ch == '\n')
      out += " + ";
    else
      out += ch;
  }
  return out;
}

}  // namespace

Certificate certificate_lower_bound(int n, int k) {
  if (k < 1 || n <= k) throw DomainError("certificate needs n > k >= 1");
  Certificate c;
  c.n = n;
  c.k = k;
  std::vector<FreeWord> letters;
  for (int i = 1; i <= k; ++i) letters.push_back(x(n, i));
  const FreeWord w = left_normed_commutator(letters);
  c.w_lambda = w.to_string();

  const BasisContext ctx(n);
  IndexWord idx;
  for (int i = 1; i <= k; ++i) idx.push_back(i);
  const LieElement lambda = left_normed(ctx, idx);
  c.lambda = one_line(lambda.to_string());

  const JohnsonValue value = tau(Endomorphism::conjugation(w), k);
  const LieElement& image = value.derivation.image(k + 1);
  c.tau_image = one_line(image.to_string());
  const WedgeTensor rho = rho_truncate(image);
  c.rho_image = one_line(rho.to_string());
  c.nonzero = !rho.is_zero();
  c.matches_bracket = rho == rho_truncate(bracket(lambda, LieElement::basis(ctx, k + 1)));

  const ExteriorVector contracted = rho.contract_first(1);
  c.contraction = contracted.to_string();
  IndexWord tail;
  for (int i = 2; i <= k + 1; ++i) tail.push_back(i);
  c.wedge_ok = contracted == ExteriorVector::wedge(ctx, tail);

  c.pass = c.nonzero && c.matches_bracket && c.wedge_ok;
  if (!c.nonzero)
    c.failure = "tau_hat image vanishes";
  else if (!c.matches_bracket)
    c.failure = "tau_hat image differs from rho([lambda, e_{k+1}])";
  else if (!c.wedge_ok)
    c.failure = "contraction is " + c.contraction;
  return c;
}

SymplecticCertificate certificate_symplectic(int g, int k) {
  if (k < 1 || g <= k) throw DomainError("symplectic certificate needs g > k >= 1");
  SymplecticCertificate c;
  c.g = g;
  c.k = k;
  const BasisContext ctx = BasisContext::symplectic_genus(g);
  IndexWord idx;
  for (int i = 1; i <= k; ++i) idx.push_back(ctx.a(i));
  const LieElement lambda = left_normed(ctx, idx);
  const LieElement target = LieElement::basis(ctx, ctx.a(k + 1));
  const LieElement image = derivation_apply(pp(lambda), target);
  c.pp_image = one_line(image.to_string());
  const WedgeTensor rho = rho_truncate(image);
  c.rho_image = one_line(rho.to_string());
  c.matches_bracket = image == bracket(lambda, target);
  c.nonzero = !rho.is_zero();
  c.pass = c.matches_bracket && c.nonzero;
  if (!c.matches_bracket)
    c.failure = "PP(lambda)(a_{k+1}) differs from [lambda, a_{k+1}]";
  else if (!c.nonzero)
    c.failure = "rho image vanishes";
  return c;
}

}  // namespace workbench
