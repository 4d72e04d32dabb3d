#include "workbench/congruence.hpp"

#include <algorithm>

#include "workbench/error.hpp"
#include "workbench/johnson.hpp"
#include "workbench/words.hpp"

namespace workbench {

namespace {

void check_index(int i, int bound, const char* what) {
  if (i < 1 || i > bound) throw DomainError(std::string(what) + ": index out of range");
}

void check_prime(long p) {
  if (!is_prime(p)) throw DomainError("level must be prime, got " + std::to_string(p));
}

std::size_t at(int i) { return static_cast<std::size_t>(i - 1); }

}  // namespace

Matrix sl_E(int n, int i, int j, const Integer& r) {
  check_index(i, n, "E");
  check_index(j, n, "E");
  if (i == j) throw DomainError("E needs i != j");
  Matrix m = Matrix::identity(static_cast<std::size_t>(n));
  m(at(i), at(j)) = r;
  return m;
}

Matrix sl_B(int n, int i, const Integer& r) {
  if (i < 1 || i >= n) throw DomainError("B needs 1 <= i < n");
  Matrix m = Matrix::identity(static_cast<std::size_t>(n));
  m(at(i), at(i)) += r;
  m(at(i), at(i + 1)) += r;
  m(at(i + 1), at(i)) -= r;
  m(at(i + 1), at(i + 1)) -= r;
  return m;
}

Matrix sl_N1(int n) {
  if (n < 1) throw DomainError("N1 needs n >= 1");
  Matrix m = Matrix::identity(static_cast<std::size_t>(n));
  m(0, 0) = -1;
  return m;
}

std::vector<NamedMatrix> sl_generators(int n, long p) {
  if (n < 2) throw DomainError("SL generators need n >= 2");
  std::vector<NamedMatrix> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back({"E" + std::to_string(i) + "," + std::to_string(j), sl_E(n, i, j, p)});
  for (int i = 1; i < n; ++i) out.push_back({"B" + std::to_string(i), sl_B(n, i, p)});
  return out;
}

Matrix gen_sp(SpKind kind, int g, int i, int j, const Integer& r) {
  if (g < 1) throw DomainError("genus must be positive");
  const std::size_t G = static_cast<std::size_t>(g);
  Matrix m = Matrix::identity(2 * G);
  switch (kind) {
    case SpKind::X:
    case SpKind::Y: {
      check_index(i, g, "X/Y");
      check_index(j, g, "X/Y");
      if (i > j) throw DomainError("X and Y need i <= j");
      const std::size_t ro = kind == SpKind::X ? G : 0;
      const std::size_t co = kind == SpKind::X ? 0 : G;
      m(ro + at(i), co + at(j)) = r;
      m(ro + at(j), co + at(i)) = r;
      break;
    }
    case SpKind::Z:
      check_index(i, g, "Z");
      check_index(j, g, "Z");
      if (i == j) throw DomainError("Z needs i != j");
      m(at(i), at(j)) = r;
      m(G + at(j), G + at(i)) = -r;
      break;
    case SpKind::W:
      if (i < 1 || i >= g) throw DomainError("W needs 1 <= i < g");
      // upper-left beta_i(r), lower-right -beta_i(r)^T
      m(at(i), at(i)) += r;
      m(at(i), at(i + 1)) += r;
      m(at(i + 1), at(i)) -= r;
      m(at(i + 1), at(i + 1)) -= r;
      m(G + at(i), G + at(i)) -= r;
      m(G + at(i + 1), G + at(i)) -= r;
      m(G + at(i), G + at(i + 1)) += r;
      m(G + at(i + 1), G + at(i + 1)) += r;
      break;
    case SpKind::U:
      m(0, 0) += r;
      m(0, G) += r;
      m(G, 0) -= r;
      m(G, G) -= r;
      break;
  }
  return m;
}

std::vector<NamedMatrix> sp_generators(int g, long p) {
  std::vector<NamedMatrix> out;
  auto pair_name = [](const char* k, int i, int j) { return std::string(k) + std::to_string(i) + "," + std::to_string(j); };
  for (int i = 1; i <= g; ++i)
    for (int j = i; j <= g; ++j) out.push_back({pair_name("X", i, j), gen_sp(SpKind::X, g, i, j, p)});
  for (int i = 1; i <= g; ++i)
    for (int j = i; j <= g; ++j) out.push_back({pair_name("Y", i, j), gen_sp(SpKind::Y, g, i, j, p)});
  for (int i = 1; i <= g; ++i)
    for (int j = 1; j <= g; ++j)
      if (i != j) out.push_back({pair_name("Z", i, j), gen_sp(SpKind::Z, g, i, j, p)});
  for (int i = 1; i < g; ++i) out.push_back({"W" + std::to_string(i), gen_sp(SpKind::W, g, i, 0, p)});
  out.push_back({"U1", gen_sp(SpKind::U, g, 0, 0, p)});
  return out;
}

SymplecticContext::SymplecticContext(int genus) : g(genus) {
  if (genus < 1) throw DomainError("genus must be positive");
  const std::size_t G = static_cast<std::size_t>(genus);
  J = Matrix(2 * G, 2 * G);
  for (std::size_t i = 0; i < G; ++i) {
    J(i, G + i) = 1;
    J(G + i, i) = -1;
  }
}

bool is_level(const Matrix& m, long p) {
  if (p < 1) throw DomainError("level must be positive");
  if (!m.square()) return false;
  return (m - Matrix::identity(m.rows())).mod(p).is_zero();
}

bool is_symplectic(const Matrix& m, const SymplecticContext& ctx) {
  if (m.rows() != ctx.J.rows() || m.cols() != ctx.J.cols()) throw DomainError("matrix dimension does not match 2g");
  return m.transpose() * ctx.J * m == ctx.J;
}

Matrix congruence_log(const Matrix& m, long p) {
  check_prime(p);
  if (!is_level(m, p)) throw DomainError("matrix is not level " + std::to_string(p));
  Matrix a = m - Matrix::identity(m.rows());
  const Integer q = p;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Integer v = a(r, c) / q;  // exact
      a(r, c) = mod_floor(v, q);
    }
  return a;
}

bool in_sp_lie(const Matrix& a, const SymplecticContext& ctx, long p) {
  if (a.rows() != ctx.J.rows() || a.cols() != ctx.J.cols()) throw DomainError("matrix dimension does not match 2g");
  return (a.transpose() * ctx.J + ctx.J * a).mod(p).is_zero();
}

int rank_mod_p(const std::vector<std::vector<Integer>>& vectors, long p) {
  check_prime(p);
  std::vector<std::vector<long>> rows;
  for (const auto& v : vectors) {
    std::vector<long> r;
    for (const auto& x : v) r.push_back(mod_floor(x, Integer(p)).get_si());
    rows.push_back(std::move(r));
  }
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  auto inv = [p](long a) {
    long r = 1, b = a, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    std::size_t piv = top;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[top], rows[piv]);
    const long s = inv(rows[top][c]);
    for (auto& x : rows[top]) x = x * s % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || rows[r][c] == 0) continue;
      const long f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = ((rows[r][k] - f * rows[top][k]) % p + p) % p;
    }
    ++top;
    ++rank;
  }
  return rank;
}

namespace {
std::vector<Integer> flatten(const Matrix& m) {
  std::vector<Integer> v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}
}  // namespace

LieRankResult lie_rank(const std::vector<NamedMatrix>& gens, int g, long p) {
  check_prime(p);
  LieRankResult out;
  out.g = g;
  out.p = p;
  out.expected = 2 * g * g + g;
  out.generators = static_cast<int>(gens.size());
  std::vector<std::vector<Integer>> span;
  for (const auto& gen : gens) {
    span.push_back(flatten(congruence_log(gen.matrix, p)));
    const int r = rank_mod_p(span, p);
    if (r == out.rank)
      out.dependent.push_back(gen.name);
    else
      out.rank = r;
  }
  return out;
}

LieRankResult lie_rank_certificate(int g, long p) {
  if (g < 2) throw DomainError("lie_rank_certificate needs g >= 2");
  check_prime(p);
  return lie_rank(sp_generators(g, p), g, p);
}

bool LiftReport::pass() const {
  return !records.empty() && std::all_of(records.begin(), records.end(), [](const LiftRecord& r) { return r.pass(); });
}

LiftReport sl_lift_check(int n, long p) {
  if (n < 2) throw DomainError("sl_lift_check needs n >= 2");
  check_prime(p);
  LiftReport report;
  report.n = n;
  report.p = p;
  auto record = [&](const std::string& name, const GeneratorSpec& spec, const Matrix& expected, long level) {
    const Matrix got = abelianize(make_generator(spec));
    LiftRecord r;
    r.name = name;
    r.matches = got == expected;
    r.level_modulus = level;
    r.level = is_level(got, level);
    if (!r.pass()) r.witness = got.to_string();
    report.records.push_back(std::move(r));
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      GeneratorSpec spec{GeneratorKind::E, {i, j}, p, n};
      record("E" + std::to_string(i) + "," + std::to_string(j), spec, sl_E(n, i, j, p), p);
    }
  for (int i = 1; i < n; ++i) {
    GeneratorSpec spec{GeneratorKind::B, {i}, p, n};
    record("B" + std::to_string(i), spec, sl_B(n, i, p), p);
  }
  record("N1", GeneratorSpec{GeneratorKind::N, {1}, 0, n}, sl_N1(n), 2);
  return report;
}

}  // namespace workbench
