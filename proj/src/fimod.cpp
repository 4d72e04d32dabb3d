#include "workbench/fimod.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>

#include "workbench/error.hpp"
#include "workbench/parallel.hpp"

namespace workbench {

// --- subsets ------------------------------------------------------------------

int subset_size(Subset s) { return std::popcount(s); }

bool subset_contains(Subset s, int i) { return i >= 1 && i <= 32 && (s >> (i - 1)) & 1u; }

std::vector<int> subset_elements(Subset s) {
  std::vector<int> out;
  for (int i = 1; s != 0; ++i, s >>= 1)
    if (s & 1u) out.push_back(i);
  return out;
}

Subset subset_of(const std::vector<int>& elements) {
  Subset s = 0;
  for (int i : elements) {
    if (i < 1 || i > kMaxFiN) throw DomainError("subset element out of range");
    s |= Subset{1} << (i - 1);
  }
  return s;
}

std::string subset_key(Subset s) {
  std::string out;
  for (int i : subset_elements(s)) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

Subset parse_subset_key(const std::string& key) {
  std::vector<int> elements;
  std::stringstream ss(key);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      elements.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("bad subset key '" + key + "'");
    }
  }
  const Subset s = subset_of(elements);
  if (subset_size(s) != static_cast<int>(elements.size())) throw ParseError("repeated element in subset key '" + key + "'");
  return s;
}

namespace {

Subset with(Subset s, int i) { return s | (Subset{1} << (i - 1)); }
Subset without(Subset s, int i) { return s & ~(Subset{1} << (i - 1)); }

// All subsets of `within` with exactly k elements, in increasing bitmask order.
std::vector<Subset> subsets_of_size(Subset within, int k) {
  std::vector<Subset> out;
  for (Subset s = within;; s = (s - 1) & within) {
    if (subset_size(s) == k) out.push_back(s);
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(r0 + r, c0 + c) = b(r, c);
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

bool in_column_span(const Matrix& columns, const Matrix& span) {
  bool any = false;
  for (std::size_t c = 0; c < columns.cols() && !any; ++c)
    for (std::size_t r = 0; r < columns.rows(); ++r)
      if (columns(r, c) != 0) {
        any = true;
        break;
      }
  if (!any) return true;
  if (span.cols() == 0) return false;
  const IntegerSolver solver(span);
  for (std::size_t c = 0; c < columns.cols(); ++c)
    if (!solver.in_image(columns.column(c))) return false;
  return true;
}

}  // namespace

// --- FGAbelian / AbMap ----------------------------------------------------------

AbelianStructure FGAbelian::structure() const { return cokernel_structure(relations); }

FGAbelian direct_sum(const std::vector<FGAbelian>& parts) {
  FGAbelian out;
  std::vector<Matrix> rels;
  for (const auto& p : parts) {
    out.ngens += p.ngens;
    rels.push_back(p.relations);
  }
  out.relations = block_diagonal(rels);
  return out;
}

bool AbMap::well_defined() const {
  if (matrix.rows() != target.ngens || matrix.cols() != source.ngens) return false;
  if (source.relations.cols() == 0) return true;
  return in_column_span(matrix * source.relations, target.relations);
}

bool AbMap::surjective() const {
  SparseMatrix m = SparseMatrix::from_dense(matrix);
  m.append_columns(SparseMatrix::from_dense(target.relations));
  return cokernel_structure(m).is_zero();
}

bool AbMap::injective() const {
  // kernel of [matrix | -R_target], projected to the source coordinates
  Matrix stacked = matrix.hcat(target.relations * Integer(-1));
  if (stacked.cols() == 0) return true;
  if (stacked.rows() == 0) stacked = Matrix(0, stacked.cols());
  const Matrix kernel = IntegerSolver(stacked).kernel();
  Matrix xs(source.ngens, kernel.cols());
  for (std::size_t c = 0; c < kernel.cols(); ++c)
    for (std::size_t r = 0; r < source.ngens; ++r) xs(r, c) = kernel(r, c);
  return in_column_span(xs, source.relations);
}

bool AbMap::iso() const { return surjective() && source.structure() == target.structure(); }

bool maps_agree(const Matrix& a, const Matrix& b, const FGAbelian& target) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return in_column_span(a - b, target.relations);
}

// --- presentation -----------------------------------------------------------------

FIModulePresentation::FIModulePresentation(int N) : N_(N) {
  if (N < 0 || N > kMaxFiN) throw DomainError("N must be in 0.." + std::to_string(kMaxFiN));
  groups_.resize(std::size_t{1} << N);
}

void FIModulePresentation::set_group(Subset I, FGAbelian g) {
  if (I > full()) throw DomainError("subset outside [N]");
  if (g.relations.rows() != g.ngens) throw DomainError("relation matrix must have ngens rows");
  groups_.at(I) = std::move(g);
}

const Matrix& FIModulePresentation::step(Subset I, int j) const {
  auto it = steps_.find({I, j});
  if (it == steps_.end()) throw DomainError("missing step map " + subset_key(I) + "->" + subset_key(with(I, j)));
  return it->second;
}

void FIModulePresentation::set_step(Subset I, int j, Matrix m) {
  if (j < 1 || j > N_ || subset_contains(I, j)) throw DomainError("step must add a new element of [N]");
  steps_[{I, j}] = std::move(m);
}

const Matrix& FIModulePresentation::transposition(Subset I, int p) const {
  auto it = transpositions_.find({I, p});
  if (it == transpositions_.end())
    throw DomainError("missing transposition " + subset_key(I) + ":" + std::to_string(p));
  return it->second;
}

void FIModulePresentation::set_transposition(Subset I, int p, Matrix m) {
  if (p < 1 || p >= subset_size(I)) throw DomainError("transposition position out of range");
  transpositions_[{I, p}] = std::move(m);
}

Matrix FIModulePresentation::inclusion_along(Subset I, const std::vector<int>& order) const {
  Matrix acc = Matrix::identity(group(I).ngens);
  Subset cur = I;
  for (int j : order) {
    acc = step(cur, j) * acc;
    cur = with(cur, j);
  }
  return acc;
}

Matrix FIModulePresentation::inclusion(Subset I, Subset J) const {
  if ((I & ~J) != 0) throw DomainError("inclusion needs I ⊆ J");
  return inclusion_along(I, subset_elements(J & ~I));
}

// --- JSON -------------------------------------------------------------------------

namespace {

nlohmann::json matrix_rows(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Integer& v = m(r, c);
      if (fits_int64(v))
        row.push_back(to_int64(v));
      else
        row.push_back(v.get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Integer json_integer(const nlohmann::json& v) {
  if (v.is_number_integer()) return from_int64(v.get<std::int64_t>());
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) == 0) return out;
  }
  throw ParseError("expected an integer, got " + v.dump());
}

Matrix matrix_from_rows(const nlohmann::json& rows, std::size_t nrows, std::size_t ncols, const std::string& what) {
  if (!rows.is_array() || rows.size() != nrows) throw ParseError(what + ": expected " + std::to_string(nrows) + " rows");
  Matrix m(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    if (!rows[r].is_array() || rows[r].size() != ncols)
      throw ParseError(what + ": row " + std::to_string(r + 1) + " needs " + std::to_string(ncols) + " entries");
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = json_integer(rows[r][c]);
  }
  return m;
}

}  // namespace

nlohmann::json FIModulePresentation::to_json() const {
  nlohmann::json doc;
  doc["N"] = N_;
  nlohmann::json groups = nlohmann::json::object();
  for (Subset I = 0; I <= full(); ++I) {
    const FGAbelian& g = group(I);
    nlohmann::json relators = nlohmann::json::array();
    for (std::size_t c = 0; c < g.relations.cols(); ++c) {
      nlohmann::json col = nlohmann::json::array();
      for (std::size_t r = 0; r < g.ngens; ++r) col.push_back(to_int64(g.relations(r, c)));
      relators.push_back(std::move(col));
    }
    groups[subset_key(I)] = {{"ngens", g.ngens}, {"relations", relators}};
  }
  doc["groups"] = std::move(groups);
  nlohmann::json steps = nlohmann::json::object();
  for (const auto& [key, m] : steps_) steps[subset_key(key.first) + "->" + subset_key(with(key.first, key.second))] = matrix_rows(m);
  doc["step_maps"] = std::move(steps);
  nlohmann::json swaps = nlohmann::json::object();
  for (const auto& [key, m] : transpositions_) swaps[subset_key(key.first) + ":" + std::to_string(key.second)] = matrix_rows(m);
  doc["transpositions"] = std::move(swaps);
  return doc;
}

FIModulePresentation FIModulePresentation::from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("N") || !doc["N"].is_number_integer()) throw ParseError("FI-module needs an integer field N");
  const int N = doc["N"].get<int>();
  if (N < 0 || N > kMaxFiN) throw ParseError("N out of range");
  FIModulePresentation m(N);
  if (!doc.contains("groups") || !doc["groups"].is_object()) throw ParseError("FI-module needs a groups object");
  std::vector<bool> seen(std::size_t{1} << N, false);
  for (const auto& [key, g] : doc["groups"].items()) {
    const Subset I = parse_subset_key(key);
    if (I > m.full()) throw ParseError("group key '" + key + "' outside [N]");
    if (!g.contains("ngens") || !g["ngens"].is_number_unsigned()) throw ParseError("group '" + key + "' needs ngens");
    FGAbelian grp;
    grp.ngens = g["ngens"].get<std::size_t>();
    const nlohmann::json rel = g.value("relations", nlohmann::json::array());
    if (!rel.is_array()) throw ParseError("relations of '" + key + "' must be a list of relator columns");
    grp.relations = Matrix(grp.ngens, rel.size());
    for (std::size_t c = 0; c < rel.size(); ++c) {
      if (!rel[c].is_array() || rel[c].size() != grp.ngens) throw ParseError("relator in '" + key + "' has the wrong length");
      for (std::size_t r = 0; r < grp.ngens; ++r) grp.relations(r, c) = json_integer(rel[c][r]);
    }
    m.set_group(I, std::move(grp));
    seen[I] = true;
  }
  for (Subset I = 0; I <= m.full(); ++I)
    if (!seen[I]) throw ParseError("missing group for subset '" + subset_key(I) + "'");

  const nlohmann::json steps = doc.value("step_maps", nlohmann::json::object());
  for (const auto& [key, rows] : steps.items()) {
    const auto arrow = key.find("->");
    if (arrow == std::string::npos) throw ParseError("step key '" + key + "' must look like I->J");
    const Subset I = parse_subset_key(key.substr(0, arrow));
    const Subset J = parse_subset_key(key.substr(arrow + 2));
    if ((I & ~J) != 0 || subset_size(J) != subset_size(I) + 1 || J > m.full())
      throw ParseError("step key '" + key + "' must add exactly one element of [N]");
    const int j = std::countr_zero(J & ~I) + 1;
    m.set_step(I, j, matrix_from_rows(rows, m.group(J).ngens, m.group(I).ngens, "step " + key));
  }
  const nlohmann::json swaps = doc.value("transpositions", nlohmann::json::object());
  for (const auto& [key, rows] : swaps.items()) {
    const auto colon = key.rfind(':');
    if (colon == std::string::npos) throw ParseError("transposition key '" + key + "' must look like I:p");
    const Subset I = parse_subset_key(key.substr(0, colon));
    int p = 0;
    try {
      p = std::stoi(key.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("bad transposition position in '" + key + "'");
    }
    if (I > m.full() || p < 1 || p >= subset_size(I)) throw ParseError("transposition key '" + key + "' out of range");
    m.set_transposition(I, p, matrix_from_rows(rows, m.group(I).ngens, m.group(I).ngens, "transposition " + key));
  }
  for (Subset I = 0; I <= m.full(); ++I) {
    for (int j = 1; j <= N; ++j)
      if (!subset_contains(I, j) && !m.steps_.count({I, j}))
        throw ParseError("missing step map " + subset_key(I) + "->" + subset_key(with(I, j)));
    for (int p = 1; p < subset_size(I); ++p)
      if (!m.transpositions_.count({I, p})) throw ParseError("missing transposition " + subset_key(I) + ":" + std::to_string(p));
  }
  return m;
}

FIModulePresentation FIModulePresentation::parse(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("FI-module JSON: ") + e.what());
  }
  return from_json(doc);
}

// --- validation ----------------------------------------------------------------------

namespace {

struct Checker {
  ValidationReport report;
  bool operator()(bool ok, const std::function<std::string()>& what) {
    ++report.checks;
    if (!ok && report.valid) {
      report.valid = false;
      report.violation = what();
    }
    return ok;
  }
};

std::string swap_name(Subset I, int p) { return "s" + std::to_string(p) + " on W_{" + subset_key(I) + "}"; }

}  // namespace

ValidationReport validate(const FIModulePresentation& m) {
  Checker check;
  const Subset full = m.full();
  for (Subset I = 0; I <= full && check.report.valid; ++I) {
    const FGAbelian& WI = m.group(I);
    const int size = subset_size(I);
    for (int j = 1; j <= m.N(); ++j) {
      if (subset_contains(I, j)) continue;
      check(AbMap{WI, m.group(with(I, j)), m.step(I, j)}.well_defined(),
            [&] { return "step " + subset_key(I) + "->" + subset_key(with(I, j)) + " does not preserve relations"; });
    }
    // squares of one-step inclusions commute
    for (int j = 1; j <= m.N(); ++j)
      for (int k = j + 1; k <= m.N(); ++k) {
        if (subset_contains(I, j) || subset_contains(I, k)) continue;
        const Subset J = with(with(I, j), k);
        check(maps_agree(m.inclusion_along(I, {j, k}), m.inclusion_along(I, {k, j}), m.group(J)), [&] {
          return "composition " + subset_key(I) + "->" + subset_key(J) + " depends on the order of " + std::to_string(j) +
                 " and " + std::to_string(k);
        });
      }
    // Coxeter relations
    const Matrix id = Matrix::identity(WI.ngens);
    for (int p = 1; p < size; ++p) {
      const Matrix& s = m.transposition(I, p);
      check(AbMap{WI, WI, s}.well_defined(), [&] { return swap_name(I, p) + " does not preserve relations"; });
      check(maps_agree(s * s, id, WI), [&] { return swap_name(I, p) + " does not square to the identity"; });
      if (p + 1 < size) {
        const Matrix& t = m.transposition(I, p + 1);
        const Matrix st = s * t;
        check(maps_agree(st * st * st, id, WI), [&] { return "braid relation fails for " + swap_name(I, p); });
      }
      for (int q = p + 2; q < size; ++q) {
        const Matrix& t = m.transposition(I, q);
        check(maps_agree(s * t, t * s, WI),
              [&] { return swap_name(I, p) + " and s" + std::to_string(q) + " do not commute"; });
      }
    }
    // naturality: a transposition of J = I+j that preserves I restricts to one of I
    const std::vector<int> elems = subset_elements(I);
    for (int j = 1; j <= m.N(); ++j) {
      if (subset_contains(I, j)) continue;
      const Subset J = with(I, j);
      const std::vector<int> jel = subset_elements(J);
      for (int p = 1; p + 1 <= static_cast<int>(jel.size()) - 0 && p < static_cast<int>(jel.size()); ++p) {
        const int a = jel[static_cast<std::size_t>(p - 1)], b = jel[static_cast<std::size_t>(p)];
        if (a == j || b == j) continue;
        const int pos = static_cast<int>(std::find(elems.begin(), elems.end(), a) - elems.begin()) + 1;
        check(maps_agree(m.transposition(J, p) * m.step(I, j), m.step(I, j) * m.transposition(I, pos), m.group(J)),
              [&] { return swap_name(J, p) + " is not natural for " + subset_key(I) + "->" + subset_key(J); });
      }
    }
    // a transposition fixing I pointwise acts trivially on the image of W_I
    for (int u = 1; u <= m.N(); ++u)
      for (int v = u + 1; v <= m.N(); ++v) {
        if (subset_contains(I, u) || subset_contains(I, v)) continue;
        const Subset J = with(with(I, u), v);
        const std::vector<int> jel = subset_elements(J);
        const auto pu = std::find(jel.begin(), jel.end(), u) - jel.begin();
        if (pu + 1 >= static_cast<std::ptrdiff_t>(jel.size()) || jel[static_cast<std::size_t>(pu + 1)] != v) continue;
        const Matrix inc = m.inclusion(I, J);
        check(maps_agree(m.transposition(J, static_cast<int>(pu) + 1) * inc, inc, m.group(J)), [&] {
          return swap_name(J, static_cast<int>(pu) + 1) + " moves the image of W_{" + subset_key(I) + "}";
        });
      }
  }
  return check.report;
}

// --- psi, eta, stabilization ------------------------------------------------------------

namespace {

std::vector<Subset> codim_one(Subset J) {
  // ordered by the missing element, ascending
  std::vector<Subset> out;
  for (int u : subset_elements(J)) out.push_back(without(J, u));
  return out;
}

std::vector<std::pair<int, int>> codim_two(Subset J) {
  std::vector<std::pair<int, int>> out;
  const auto el = subset_elements(J);
  for (std::size_t a = 0; a < el.size(); ++a)
    for (std::size_t b = a + 1; b < el.size(); ++b) out.emplace_back(el[a], el[b]);
  return out;
}

FGAbelian psi_source(const FIModulePresentation& m, Subset J) {
  std::vector<FGAbelian> parts;
  for (Subset I : codim_one(J)) parts.push_back(m.group(I));
  return direct_sum(parts);
}

void check_J(const FIModulePresentation& m, Subset J) {
  if (J == 0) throw DomainError("J must be nonempty");
  if (J > m.full()) throw DomainError("J must be a subset of [N]");
}

}  // namespace

AbMap psi(const FIModulePresentation& m, Subset J) {
  check_J(m, J);
  AbMap out;
  out.source = psi_source(m, J);
  out.target = m.group(J);
  out.matrix = Matrix(out.target.ngens, out.source.ngens);
  std::size_t c0 = 0;
  for (Subset I : codim_one(J)) {
    const Matrix block = m.inclusion(I, J);
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c) out.matrix(r, c0 + c) = block(r, c);
    c0 += block.cols();
  }
  return out;
}

AbMap eta(const FIModulePresentation& m, Subset J) {
  check_J(m, J);
  AbMap out;
  out.target = psi_source(m, J);
  const auto pairs = codim_two(J);
  std::vector<FGAbelian> parts;
  for (const auto& [u, v] : pairs) parts.push_back(m.group(without(without(J, u), v)));
  out.source = direct_sum(parts);
  out.matrix = Matrix(out.target.ngens, out.source.ngens);

  // offsets of the target blocks, indexed by missing element
  std::map<int, std::size_t> offset;
  std::size_t r0 = 0;
  for (int u : subset_elements(J)) {
    offset[u] = r0;
    r0 += m.group(without(J, u)).ngens;
  }
  std::size_t c0 = 0;
  for (const auto& [u, v] : pairs) {
    const Subset K = without(without(J, u), v);
    const Matrix plus = m.inclusion(K, without(J, u));
    const Matrix minus = m.inclusion(K, without(J, v));
    for (std::size_t c = 0; c < plus.cols(); ++c) {
      for (std::size_t r = 0; r < plus.rows(); ++r) out.matrix(offset[u] + r, c0 + c) = plus(r, c);
      for (std::size_t r = 0; r < minus.rows(); ++r) out.matrix(offset[v] + r, c0 + c) = -minus(r, c);
    }
    c0 += plus.cols();
  }
  return out;
}

StabResult central_stabilization(const FIModulePresentation& m, Subset J) {
  StabResult out;
  out.J = J;
  const AbMap p = psi(m, J);
  const AbMap e = eta(m, J);
  out.stab = p.source;
  out.stab.relations = p.source.relations.hcat(e.matrix);
  out.nat_map = AbMap{out.stab, p.target, p.matrix};

  SparseMatrix rel = SparseMatrix::from_dense(p.source.relations);
  rel.append_columns(SparseMatrix::from_dense(e.matrix));
  out.stab_structure = cokernel_structure(rel);
  out.target_structure = p.target.structure();
  out.surjective = out.nat_map.surjective();
  out.iso = out.surjective && out.stab_structure == out.target_structure;
  return out;
}

namespace {

std::vector<Subset> nonempty_subsets_by_size(Subset full) {
  std::vector<Subset> out;
  for (Subset J = 1; J <= full && full != 0; ++J) out.push_back(J);
  std::stable_sort(out.begin(), out.end(), [](Subset a, Subset b) { return subset_size(a) < subset_size(b); });
  return out;
}

}  // namespace

SweepValue generation_degree(const FIModulePresentation& m) {
  const auto subsets = nonempty_subsets_by_size(m.full());
  for (int A = 0; A <= m.N(); ++A) {
    bool ok = true;
    for (Subset J : subsets) {
      if (subset_size(J) <= A) continue;
      std::vector<Subset> sources = subsets_of_size(J, A);
      SparseMatrix assembled(m.group(J).ngens, 0);
      for (Subset I : sources) assembled.append_columns(SparseMatrix::from_dense(m.inclusion(I, J)));
      assembled.append_columns(SparseMatrix::from_dense(m.group(J).relations));
      if (!cokernel_structure(assembled).is_zero()) {
        ok = false;
        break;
      }
    }
    // A = N holds vacuously; the window cannot tell it apart from anything larger
    if (ok) return {A, A == m.N() && m.N() > 0};
  }
  return {m.N(), true};
}

StabilityTable stability_start(const FIModulePresentation& m) {
  StabilityTable table;
  const auto subsets = nonempty_subsets_by_size(m.full());
  table.rows.resize(subsets.size());
  parallel_for(subsets.size(), [&](std::size_t i) { table.rows[i] = central_stabilization(m, subsets[i]); });
  int worst = 0;
  for (const auto& r : table.rows)
    if (!r.iso) worst = std::max(worst, subset_size(r.J));
  table.start = {worst, worst == m.N() && m.N() > 0};
  return table;
}

// --- builtins ---------------------------------------------------------------------------

namespace {

using Key = std::vector<int>;

// A module with a basis of keys per subset, inclusions sending each key to
// itself, and permutations acting on keys by relabelling with a sign.
struct BasisModule {
  std::function<std::vector<Key>(Subset)> basis;
  // image of a key under the element swap a <-> b
  std::function<std::pair<Key, int>(const Key&, int, int)> swap;
  // optional relators, as key combinations
  std::function<std::vector<std::map<Key, int>>(Subset)> relators;
};

FIModulePresentation build(const BasisModule& spec, int N) {
  FIModulePresentation m(N);
  std::vector<std::map<Key, std::size_t>> index(std::size_t{1} << N);
  for (Subset I = 0; I <= m.full(); ++I) {
    const auto keys = spec.basis(I);
    for (std::size_t i = 0; i < keys.size(); ++i) index[I][keys[i]] = i;
    FGAbelian g = FGAbelian::free(keys.size());
    if (spec.relators) {
      const auto rels = spec.relators(I);
      g.relations = Matrix(keys.size(), rels.size());
      for (std::size_t c = 0; c < rels.size(); ++c)
        for (const auto& [k, v] : rels[c]) g.relations(index[I].at(k), c) = v;
    }
    m.set_group(I, std::move(g));
  }
  for (Subset I = 0; I <= m.full(); ++I) {
    const auto& src = index[I];
    for (int j = 1; j <= N; ++j) {
      if (subset_contains(I, j)) continue;
      const auto& dst = index[with(I, j)];
      Matrix step(dst.size(), src.size());
      for (const auto& [k, c] : src) step(dst.at(k), c) = 1;
      m.set_step(I, j, std::move(step));
    }
    const auto el = subset_elements(I);
    for (std::size_t p = 1; p < el.size(); ++p) {
      Matrix s(src.size(), src.size());
      for (const auto& [k, c] : src) {
        const auto [image, sign] = spec.swap(k, el[p - 1], el[p]);
        if (sign != 0) s(src.at(image), c) = sign;
      }
      m.set_transposition(I, static_cast<int>(p), std::move(s));
    }
  }
  return m;
}

int relabel(int x, int a, int b) { return x == a ? b : x == b ? a : x; }

// Sorts a strictly increasing tuple after relabelling; sign of the permutation.
std::pair<Key, int> sorted_with_sign(Key k) {
  int sign = 1;
  for (std::size_t i = 1; i < k.size(); ++i)
    for (std::size_t j = i; j > 0 && k[j - 1] > k[j]; --j) {
      std::swap(k[j - 1], k[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < k.size(); ++i)
    if (k[i - 1] == k[i]) return {k, 0};
  return {k, sign};
}

void combinations(const std::vector<int>& pool, std::size_t k, std::size_t from, Key& cur, std::vector<Key>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    combinations(pool, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<Key> k_subsets(const std::vector<int>& pool, int k) {
  std::vector<Key> out;
  Key cur;
  combinations(pool, static_cast<std::size_t>(k), 0, cur, out);
  return out;
}

// H_I labels: a_i -> 2i-1, b_i -> 2i.
std::vector<int> h_labels(Subset I) {
  std::vector<int> out;
  for (int i : subset_elements(I)) {
    out.push_back(2 * i - 1);
    out.push_back(2 * i);
  }
  return out;
}

int relabel_h(int label, int a, int b) {
  const int element = (label + 1) / 2;
  const int offset = label - (2 * element - 1);
  return 2 * relabel(element, a, b) - 1 + offset;
}

}  // namespace

BuiltinSpec BuiltinSpec::parse(const std::string& name) {
  BuiltinSpec s;
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  int param = 0;
  if (colon != std::string::npos) {
    try {
      param = std::stoi(name.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("bad builtin parameter in '" + name + "'");
    }
  }
  if (head == "constant")
    s.kind = BuiltinKind::constant;
  else if (head == "standard")
    s.kind = BuiltinKind::standard;
  else if (head == "exterior")
    s.kind = BuiltinKind::exterior;
  else if (head == "tensor_wedge")
    s.kind = BuiltinKind::tensor_wedge;
  else
    throw DomainError("unknown builtin module '" + name + "'");
  const bool needs_param = s.kind == BuiltinKind::exterior || s.kind == BuiltinKind::tensor_wedge;
  if (needs_param && colon == std::string::npos) throw DomainError("builtin '" + head + "' needs a parameter, e.g. " + head + ":2");
  if (!needs_param && colon != std::string::npos) throw DomainError("builtin '" + head + "' takes no parameter");
  if (needs_param && param < 1) throw DomainError("builtin parameter must be >= 1");
  s.param = param;
  return s;
}

std::string BuiltinSpec::name() const {
  switch (kind) {
    case BuiltinKind::constant: return "constant";
    case BuiltinKind::standard: return "standard";
    case BuiltinKind::exterior: return "exterior:" + std::to_string(param);
    case BuiltinKind::tensor_wedge: return "tensor_wedge:" + std::to_string(param);
  }
  return "";
}

FIModulePresentation builtin(const BuiltinSpec& spec, int N) {
  if (N < 0 || N > kMaxFiN) throw DomainError("N must be in 0.." + std::to_string(kMaxFiN));
  BasisModule b;
  switch (spec.kind) {
    case BuiltinKind::constant:
      b.basis = [](Subset) { return std::vector<Key>{Key{}}; };
      b.swap = [](const Key& k, int, int) { return std::pair<Key, int>{k, 1}; };
      break;
    case BuiltinKind::standard:
      b.basis = [](Subset I) {
        std::vector<Key> out;
        for (int i : subset_elements(I)) out.push_back({i});
        return out;
      };
      b.swap = [](const Key& k, int a, int c) { return std::pair<Key, int>{Key{relabel(k[0], a, c)}, 1}; };
      break;
    case BuiltinKind::exterior: {
      const int m = spec.param;
      b.basis = [m](Subset I) { return k_subsets(subset_elements(I), m); };
      b.swap = [](const Key& k, int a, int c) {
        Key image;
        for (int x : k) image.push_back(relabel(x, a, c));
        return sorted_with_sign(image);
      };
      break;
    }
    case BuiltinKind::tensor_wedge: {
      const int k = spec.param;
      b.basis = [k](Subset I) {
        std::vector<Key> out;
        const auto labels = h_labels(I);
        const auto wedges = k_subsets(labels, k);
        for (int h : labels)
          for (const auto& w : wedges) {
            Key key{h};
            key.insert(key.end(), w.begin(), w.end());
            out.push_back(std::move(key));
          }
        return out;
      };
      b.swap = [](const Key& key, int a, int c) {
        Key tail;
        for (std::size_t i = 1; i < key.size(); ++i) tail.push_back(relabel_h(key[i], a, c));
        auto [sorted, sign] = sorted_with_sign(tail);
        Key image{relabel_h(key[0], a, c)};
        image.insert(image.end(), sorted.begin(), sorted.end());
        return std::pair<Key, int>{image, sign};
      };
      break;
    }
  }
  return build(b, N);
}

FIModulePresentation doubled_standard(int N) {
  BasisModule b;
  b.basis = [](Subset I) {
    std::vector<Key> out;
    for (int i : subset_elements(I)) {
      out.push_back({i, 0});
      out.push_back({i, 1});
    }
    return out;
  };
  b.swap = [](const Key& k, int a, int c) { return std::pair<Key, int>{Key{relabel(k[0], a, c), k[1]}, 1}; };
  b.relators = [](Subset I) {
    std::vector<std::map<Key, int>> out;
    for (int i : subset_elements(I)) out.push_back({{Key{i, 0}, 1}, {Key{i, 1}, -1}});
    return out;
  };
  return build(b, N);
}

// --- morphisms --------------------------------------------------------------------------

FIMorphism sum_morphism(const FIModulePresentation& standard, const FIModulePresentation& constant) {
  if (standard.N() != constant.N()) throw DomainError("modules on different [N]");
  FIMorphism f;
  for (Subset I = 0; I <= standard.full(); ++I) {
    Matrix m(constant.group(I).ngens, standard.group(I).ngens);
    for (std::size_t c = 0; c < m.cols(); ++c) m(0, c) = 1;
    f.maps.push_back(std::move(m));
  }
  return f;
}

FIMorphism fold_morphism(const FIModulePresentation& doubled, const FIModulePresentation& standard) {
  if (doubled.N() != standard.N()) throw DomainError("modules on different [N]");
  FIMorphism f;
  for (Subset I = 0; I <= standard.full(); ++I) {
    Matrix m(standard.group(I).ngens, doubled.group(I).ngens);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      m(r, 2 * r) = 1;
      m(r, 2 * r + 1) = 1;
    }
    f.maps.push_back(std::move(m));
  }
  return f;
}

AbMap component(const FIModulePresentation& v, const FIModulePresentation& w, const FIMorphism& f, Subset J) {
  return AbMap{v.group(J), w.group(J), f.maps.at(J)};
}

ValidationReport validate_morphism(const FIModulePresentation& v, const FIModulePresentation& w, const FIMorphism& f) {
  Checker check;
  if (!check(v.N() == w.N() && f.maps.size() == (std::size_t{1} << v.N()), [] { return "morphism has the wrong shape"; }))
    return check.report;
  for (Subset I = 0; I <= v.full(); ++I) {
    const Matrix& fI = f.maps[I];
    check(component(v, w, f, I).well_defined(), [&] { return "f_{" + subset_key(I) + "} does not preserve relations"; });
    for (int j = 1; j <= v.N(); ++j) {
      if (subset_contains(I, j)) continue;
      const Subset J = with(I, j);
      check(maps_agree(f.maps[J] * v.step(I, j), w.step(I, j) * fI, w.group(J)),
            [&] { return "f is not natural for " + subset_key(I) + "->" + subset_key(J); });
    }
    for (int p = 1; p < subset_size(I); ++p)
      check(maps_agree(fI * v.transposition(I, p), w.transposition(I, p) * fI, w.group(I)),
            [&] { return "f does not commute with " + swap_name(I, p); });
  }
  return check.report;
}

InducedStab induced_stab_map(const FIModulePresentation& v, const FIModulePresentation& w, const FIMorphism& f,
                             Subset J) {
  const StabResult sv = central_stabilization(v, J);
  const StabResult sw = central_stabilization(w, J);
  std::vector<Matrix> blocks;
  for (Subset I : codim_one(J)) blocks.push_back(f.maps.at(I));
  InducedStab out;
  out.map = AbMap{sv.stab, sw.stab, block_diagonal(blocks)};
  out.well_defined = out.map.well_defined();
  out.commutes = maps_agree(sw.nat_map.matrix * out.map.matrix, f.maps.at(J) * sv.nat_map.matrix, w.group(J));
  return out;
}

}  // namespace workbench
