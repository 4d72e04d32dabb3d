#include "workbench/freelie.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "workbench/error.hpp"

namespace workbench {

// --- BasisContext -----------------------------------------------------------

BasisContext::BasisContext(int rank, bool symplectic) : rank_(rank), symplectic_(symplectic) {
  if (rank < 1) throw DomainError("basis rank must be positive");
  if (symplectic && rank % 2 != 0) throw DomainError("symplectic context needs even rank");
}

int BasisContext::genus() const {
  if (!symplectic_) throw DomainError("context has no symplectic structure");
  return rank_ / 2;
}

int BasisContext::pairing(int x, int y) const {
  const int g = genus();
  check_index(x);
  check_index(y);
  if (x <= g && y == x + g) return 1;
  if (x > g && y == x - g) return -1;
  return 0;
}

void BasisContext::check_index(int i) const {
  if (i < 1 || i > rank_)
    throw DomainError("basis index " + std::to_string(i) + " out of range 1.." + std::to_string(rank_));
}

namespace {

void check_same_context(const BasisContext& a, const BasisContext& b, const char* op) {
  if (!(a == b)) throw DomainError(std::string("context mismatch in ") + op);
}

// Sorts indices in place and returns the permutation sign, 0 on a repeat.
int sort_with_sign(IndexWord& w) {
  int sign = 1;
  for (std::size_t i = 1; i < w.size(); ++i)
    for (std::size_t j = i; j > 0 && w[j - 1] >= w[j]; --j) {
      if (w[j - 1] == w[j]) return 0;
      std::swap(w[j - 1], w[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] == w[i]) return 0;
  return sign;
}

template <class Map, class Key>
void accumulate(Map& m, const Key& k, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = m.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

std::string index_word_text(const IndexWord& w, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += sep;
    out += 'e';
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace

// --- HomTensor ------------------------------------------------------------

Integer HomTensor::coefficient(const IndexWord& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void HomTensor::add_term(const IndexWord& m, const Integer& c) {
  if (static_cast<int>(m.size()) != degree_) throw DomainError("tensor term has the wrong degree");
  accumulate(terms_, m, c);
}

HomTensor& HomTensor::operator+=(const HomTensor& rhs) {
  check_same_context(ctx_, rhs.ctx_, "tensor sum");
  if (rhs.is_zero()) return *this;
  if (degree_ != rhs.degree_) throw DomainError("degree mismatch in tensor sum");
  for (const auto& [m, c] : rhs.terms_) accumulate(terms_, m, c);
  return *this;
}

HomTensor& HomTensor::operator-=(const HomTensor& rhs) {
  check_same_context(ctx_, rhs.ctx_, "tensor difference");
  if (rhs.is_zero()) return *this;
  if (degree_ != rhs.degree_) throw DomainError("degree mismatch in tensor difference");
  for (const auto& [m, c] : rhs.terms_) accumulate(terms_, m, Integer(-c));
  return *this;
}

HomTensor& HomTensor::operator*=(const Integer& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

HomTensor operator*(const HomTensor& a, const HomTensor& b) {
  check_same_context(a.ctx_, b.ctx_, "tensor product");
  HomTensor out(a.ctx_, a.degree_ + b.degree_);
  IndexWord key;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      key = ma;
      key.insert(key.end(), mb.begin(), mb.end());
      accumulate(out.terms_, key, Integer(ca * cb));
    }
  return out;
}

std::string HomTensor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) out += c.get_str() + " * " + index_word_text(m, "⊗") + "\n";
  out.pop_back();
  return out;
}

// --- Lyndon words -----------------------------------------------------------

bool is_lyndon(const IndexWord& w) {
  if (w.empty()) return false;
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    // compare w with its rotation starting at r
    for (std::size_t i = 0; i < n; ++i) {
      const int a = w[i];
      const int b = w[(r + i) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal to a rotation: periodic
    }
  }
  return true;
}

std::vector<IndexWord> lyndon_words(int n, int k) {
  if (n < 1 || k < 1) throw DomainError("lyndon_words needs n >= 1 and k >= 1");
  std::vector<IndexWord> out;
  IndexWord w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == k) out.push_back(w);
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == n) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::pair<IndexWord, IndexWord> standard_factorization(const IndexWord& w) {
  if (w.size() < 2) throw DomainError("standard factorisation needs length >= 2");
  for (std::size_t j = 1; j < w.size(); ++j) {
    IndexWord suffix(w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
    if (is_lyndon(suffix)) return {IndexWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j)), suffix};
  }
  throw DomainError("word has no proper Lyndon suffix");
}

std::string bracket_text(const IndexWord& lyndon) {
  if (lyndon.size() == 1) return std::to_string(lyndon[0]);
  auto [u, v] = standard_factorization(lyndon);
  return "[" + bracket_text(u) + "," + bracket_text(v) + "]";
}

std::vector<LyndonBasisElement> lyndon_basis(const BasisContext& ctx, int k) {
  std::vector<LyndonBasisElement> out;
  for (auto& w : lyndon_words(ctx.rank(), k)) out.push_back({w, bracket_text(w)});
  return out;
}

// --- PBW --------------------------------------------------------------------

namespace {

class PbwCache {
 public:
  explicit PbwCache(const BasisContext& ctx) : ctx_(ctx) {}

  const HomTensor& get(const IndexWord& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    HomTensor t(ctx_, static_cast<int>(w.size()));
    if (w.size() == 1) {
      t.add_term(w, 1);
    } else {
      auto [u, v] = standard_factorization(w);
      const HomTensor pu = get(u);
      const HomTensor pv = get(v);
      t = pu * pv - pv * pu;
    }
    return cache_.emplace(w, std::move(t)).first->second;
  }

 private:
  BasisContext ctx_;
  std::map<IndexWord, HomTensor> cache_;
};

LieElement project_with(PbwCache& cache, const HomTensor& t) {
  LieElement out(t.context(), t.degree());
  HomTensor rest = t;
  LieElement::Coords coords;
  while (!rest.is_zero()) {
    const auto& [m, c] = *rest.terms().begin();
    if (!is_lyndon(m))
      throw NotLieElement("not a Lie element: leading monomial " + index_word_text(m, "⊗") + " is not Lyndon");
    const Integer coeff = c;
    const IndexWord word = m;
    coords.emplace(word, coeff);
    rest -= cache.get(word) * coeff;
  }
  return LieElement::from_coords(t.context(), t.degree(), coords);
}

}  // namespace

HomTensor pbw_of_lyndon(const BasisContext& ctx, const IndexWord& lyndon) {
  if (!is_lyndon(lyndon)) throw DomainError("pbw_of_lyndon: not a Lyndon word");
  for (int i : lyndon) ctx.check_index(i);
  PbwCache cache(ctx);
  return cache.get(lyndon);
}

HomTensor pbw_embed(const LieElement& x) {
  PbwCache cache(x.context());
  HomTensor out(x.context(), x.degree());
  for (const auto& [w, c] : x.coords()) out += cache.get(w) * c;
  return out;
}

HomTensor dynkin(const HomTensor& t) {
  HomTensor out(t.context(), t.degree());
  for (const auto& [m, c] : t.terms()) {
    // left-normed expansion [[..[x1,x2],..],xm]
    std::map<IndexWord, Integer> acc{{IndexWord{m[0]}, Integer(1)}};
    for (std::size_t j = 1; j < m.size(); ++j) {
      std::map<IndexWord, Integer> next;
      for (const auto& [w, a] : acc) {
        IndexWord right = w;
        right.push_back(m[j]);
        accumulate(next, right, a);
        IndexWord left{m[j]};
        left.insert(left.end(), w.begin(), w.end());
        accumulate(next, left, Integer(-a));
      }
      acc = std::move(next);
    }
    for (const auto& [w, a] : acc) out.add_term(w, a * c);
  }
  return out;
}

LieElement lie_project_unchecked(const HomTensor& t) {
  PbwCache cache(t.context());
  return project_with(cache, t);
}

LieElement lie_project(const HomTensor& t) {
  if (t.degree() < 1) throw DomainError("lie_project needs degree >= 1");
  if (!(dynkin(t) == t * Integer(t.degree())))
    throw NotLieElement("not a Lie element: Dynkin criterion D(t) = m t fails");
  return lie_project_unchecked(t);
}

// --- LieElement -------------------------------------------------------------

LieElement LieElement::basis(const BasisContext& ctx, int i) {
  ctx.check_index(i);
  LieElement e(ctx, 1);
  e.coords_.emplace(IndexWord{i}, 1);
  return e;
}

LieElement LieElement::from_coords(const BasisContext& ctx, int degree, const Coords& coords) {
  LieElement e(ctx, degree);
  for (const auto& [w, c] : coords) {
    if (static_cast<int>(w.size()) != degree || !is_lyndon(w))
      throw DomainError("Lie coordinates must be Lyndon words of the element degree");
    for (int i : w) ctx.check_index(i);
    e.add_coord(w, c);
  }
  return e;
}

Integer LieElement::coefficient(const IndexWord& lyndon) const {
  auto it = coords_.find(lyndon);
  return it == coords_.end() ? Integer(0) : it->second;
}

void LieElement::add_coord(const IndexWord& w, const Integer& c) { accumulate(coords_, w, c); }

LieElement& LieElement::operator+=(const LieElement& rhs) {
  check_same_context(ctx_, rhs.ctx_, "Lie sum");
  if (rhs.is_zero()) return *this;
  if (degree_ != rhs.degree_) throw DomainError("degree mismatch in Lie sum");
  for (const auto& [w, c] : rhs.coords_) add_coord(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& rhs) {
  check_same_context(ctx_, rhs.ctx_, "Lie difference");
  if (rhs.is_zero()) return *this;
  if (degree_ != rhs.degree_) throw DomainError("degree mismatch in Lie difference");
  for (const auto& [w, c] : rhs.coords_) add_coord(w, Integer(-c));
  return *this;
}

LieElement& LieElement::operator*=(const Integer& s) {
  if (s == 0) {
    coords_.clear();
    return *this;
  }
  for (auto& [w, c] : coords_) c *= s;
  return *this;
}

std::string LieElement::to_string() const {
  if (coords_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : coords_) out += c.get_str() + " * " + bracket_text(w) + "\n";
  out.pop_back();
  return out;
}

LieElement LieElement::parse(const BasisContext& ctx, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<LieElement> acc;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    line = line.substr(b);
    const auto star = line.find('*');
    if (star == std::string::npos) throw ParseError("expected 'coeff * bracket' in '" + line + "'");
    std::string coeff_text = line.substr(0, star);
    coeff_text.erase(std::remove_if(coeff_text.begin(), coeff_text.end(), ::isspace), coeff_text.end());
    Integer coeff;
    if (coeff_text.empty() || coeff.set_str(coeff_text, 10) != 0)
      throw ParseError("bad coefficient '" + coeff_text + "'");
    LieElement term = evaluate(ctx, BracketExpr::parse(line.substr(star + 1))) * coeff;
    if (!acc)
      acc = term;
    else
      *acc += term;
  }
  if (!acc) throw ParseError("empty Lie element text");
  return *acc;
}

// --- GradedDerivation -------------------------------------------------------

GradedDerivation::GradedDerivation(BasisContext ctx, int degree, std::vector<LieElement> images)
    : ctx_(ctx), degree_(degree), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != ctx_.rank()) throw DomainError("derivation needs one image per basis vector");
  for (const auto& im : images_) {
    check_same_context(ctx_, im.context(), "derivation image");
    if (im.degree() != degree_ + 1) throw DomainError("derivation image has the wrong degree");
  }
}

GradedDerivation GradedDerivation::zero(const BasisContext& ctx, int degree) {
  return GradedDerivation(ctx, degree, std::vector<LieElement>(static_cast<std::size_t>(ctx.rank()), LieElement(ctx, degree + 1)));
}

bool GradedDerivation::is_zero() const {
  return std::all_of(images_.begin(), images_.end(), [](const LieElement& e) { return e.is_zero(); });
}

GradedDerivation& GradedDerivation::operator+=(const GradedDerivation& rhs) {
  check_same_context(ctx_, rhs.ctx_, "derivation sum");
  if (degree_ != rhs.degree_) throw DomainError("degree mismatch in derivation sum");
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += rhs.images_[i];
  return *this;
}

GradedDerivation& GradedDerivation::operator-=(const GradedDerivation& rhs) {
  check_same_context(ctx_, rhs.ctx_, "derivation difference");
  if (degree_ != rhs.degree_) throw DomainError("degree mismatch in derivation difference");
  for (std::size_t i = 0; i < images_.size(); ++i) images_[i] -= rhs.images_[i];
  return *this;
}

std::string GradedDerivation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    std::string img = images_[i].to_string();
    std::replace(img.begin(), img.end(), '\n', ';');
    std::string joined;
    for (char ch : img) {
      if (ch == ';')
        joined += " + ";
      else
        joined += ch;
    }
    out += "e" + std::to_string(i + 1) + " -> " + joined + "\n";
  }
  return out;
}

// --- exterior and wedge tensors ---------------------------------------------

ExteriorVector ExteriorVector::wedge(const BasisContext& ctx, const IndexWord& indices) {
  ExteriorVector v(ctx, static_cast<int>(indices.size()));
  for (int i : indices) ctx.check_index(i);
  IndexWord sorted = indices;
  const int sign = sort_with_sign(sorted);
  if (sign != 0) v.terms_.emplace(sorted, sign);
  return v;
}

void ExteriorVector::add_term(const IndexWord& increasing, const Integer& c) { accumulate(terms_, increasing, c); }

std::string ExteriorVector::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) out += c.get_str() + " * " + index_word_text(w, "∧") + "\n";
  out.pop_back();
  return out;
}

void WedgeTensor::add_term(int first, const IndexWord& tail, const Integer& c) {
  if (static_cast<int>(tail.size()) != k_) throw DomainError("wedge term has the wrong degree");
  IndexWord sorted = tail;
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return;
  accumulate(terms_, Key{first, std::move(sorted)}, Integer(c * sign));
}

WedgeTensor& WedgeTensor::operator+=(const WedgeTensor& rhs) {
  check_same_context(ctx_, rhs.ctx_, "wedge sum");
  if (k_ != rhs.k_ && !rhs.is_zero()) throw DomainError("degree mismatch in wedge sum");
  for (const auto& [key, c] : rhs.terms_) accumulate(terms_, key, c);
  return *this;
}

ExteriorVector WedgeTensor::contract_first(int index) const {
  ExteriorVector out(ctx_, k_);
  for (const auto& [key, c] : terms_)
    if (key.first == index) out.add_term(key.second, c);
  return out;
}

std::string WedgeTensor::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_)
    out += c.get_str() + " * e" + std::to_string(key.first) + " ^ " + index_word_text(key.second, "∧") + "\n";
  out.pop_back();
  return out;
}

// --- Lie operations ----------------------------------------------------------

LieElement bracket(const LieElement& x, const LieElement& y) {
  check_same_context(x.context(), y.context(), "bracket");
  const int degree = x.degree() + y.degree();
  if (x.is_zero() || y.is_zero()) return LieElement(x.context(), degree);
  PbwCache cache(x.context());
  HomTensor px(x.context(), x.degree());
  for (const auto& [w, c] : x.coords()) px += cache.get(w) * c;
  HomTensor py(y.context(), y.degree());
  for (const auto& [w, c] : y.coords()) py += cache.get(w) * c;
  return project_with(cache, px * py - py * px);
}

LieElement left_normed(const BasisContext& ctx, const IndexWord& indices) {
  if (indices.empty()) throw DomainError("left_normed needs at least one index");
  LieElement acc = LieElement::basis(ctx, indices[0]);
  for (std::size_t j = 1; j < indices.size(); ++j) acc = bracket(acc, LieElement::basis(ctx, indices[j]));
  return acc;
}

WedgeTensor rho_truncate(const LieElement& x) {
  if (x.degree() < 2) throw DomainError("rho_truncate needs degree >= 2");
  const int k = x.degree() - 1;
  WedgeTensor out(x.context(), k);
  const HomTensor t = pbw_embed(x);
  for (const auto& [m, c] : t.terms()) out.add_term(m[0], IndexWord(m.begin() + 1, m.end()), c);
  return out;
}

GradedDerivation inner_derivation(const LieElement& x) {
  std::vector<LieElement> images;
  for (int h = 1; h <= x.context().rank(); ++h) images.push_back(bracket(x, LieElement::basis(x.context(), h)));
  return GradedDerivation(x.context(), x.degree(), std::move(images));
}

LieElement derivation_apply(const GradedDerivation& d, const LieElement& x) {
  check_same_context(d.context(), x.context(), "derivation_apply");
  const BasisContext& ctx = x.context();
  const int degree = x.degree() + d.degree();
  if (x.is_zero()) return LieElement(ctx, degree);
  PbwCache cache(ctx);
  std::vector<HomTensor> image_tensors;
  for (const auto& im : d.images()) {
    HomTensor t(ctx, im.degree());
    for (const auto& [w, c] : im.coords()) t += cache.get(w) * c;
    image_tensors.push_back(std::move(t));
  }
  HomTensor px(ctx, x.degree());
  for (const auto& [w, c] : x.coords()) px += cache.get(w) * c;

  HomTensor out(ctx, degree);
  IndexWord key;
  for (const auto& [m, c] : px.terms()) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const HomTensor& sub = image_tensors[static_cast<std::size_t>(m[j] - 1)];
      for (const auto& [s, a] : sub.terms()) {
        key.assign(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(j));
        key.insert(key.end(), s.begin(), s.end());
        key.insert(key.end(), m.begin() + static_cast<std::ptrdiff_t>(j) + 1, m.end());
        out.add_term(key, a * c);
      }
    }
  }
  return project_with(cache, out);
}

GradedDerivation derivation_bracket(const GradedDerivation& d1, const GradedDerivation& d2) {
  check_same_context(d1.context(), d2.context(), "derivation_bracket");
  std::vector<LieElement> images;
  for (int h = 1; h <= d1.context().rank(); ++h)
    images.push_back(derivation_apply(d1, d2.image(h)) - derivation_apply(d2, d1.image(h)));
  return GradedDerivation(d1.context(), d1.degree() + d2.degree(), std::move(images));
}

LieElement omega(const BasisContext& ctx) {
  const int g = ctx.genus();
  LieElement::Coords coords;
  for (int i = 1; i <= g; ++i) coords.emplace(IndexWord{ctx.a(i), ctx.b(i)}, 1);
  return LieElement::from_coords(ctx, 2, coords);
}

GradedDerivation pp1(const LieElement& x) {
  const BasisContext& ctx = x.context();
  ctx.genus();
  if (x.degree() != 1) throw DomainError("pp1 needs a degree-1 element");
  const LieElement w = omega(ctx);
  std::vector<LieElement> images;
  for (int h = 1; h <= ctx.rank(); ++h) {
    LieElement img = bracket(x, LieElement::basis(ctx, h));
    Integer pairing = 0;
    for (const auto& [word, c] : x.coords()) pairing += c * ctx.pairing(h, word[0]);
    if (pairing != 0) img += w * pairing;
    images.push_back(std::move(img));
  }
  return GradedDerivation(ctx, 1, std::move(images));
}

namespace {

class PpCache {
 public:
  explicit PpCache(const BasisContext& ctx) : ctx_(ctx) {}
  const GradedDerivation& get(const IndexWord& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    GradedDerivation d;
    if (w.size() == 1) {
      d = pp1(LieElement::basis(ctx_, w[0]));
    } else {
      auto [u, v] = standard_factorization(w);
      const GradedDerivation du = get(u);
      const GradedDerivation dv = get(v);
      d = derivation_bracket(du, dv);
    }
    return cache_.emplace(w, std::move(d)).first->second;
  }

 private:
  BasisContext ctx_;
  std::map<IndexWord, GradedDerivation> cache_;
};

GradedDerivation scaled(GradedDerivation d, const Integer& s) {
  std::vector<LieElement> images = d.images();
  for (auto& im : images) im *= s;
  return GradedDerivation(d.context(), d.degree(), std::move(images));
}

}  // namespace

GradedDerivation pp(const LieElement& x) {
  const BasisContext& ctx = x.context();
  ctx.genus();
  PpCache cache(ctx);
  GradedDerivation out = GradedDerivation::zero(ctx, x.degree());
  for (const auto& [w, c] : x.coords()) out += scaled(cache.get(w), c);
  return out;
}

// --- bracket expressions -----------------------------------------------------

namespace {

struct ExprParser {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  BracketExpr parse() {
    skip();
    if (pos >= s.size()) throw ParseError("unexpected end of bracket expression");
    BracketExpr e;
    if (s[pos] == '[') {
      ++pos;
      e.children.push_back(parse());
      skip();
      if (pos >= s.size() || s[pos] != ',') throw ParseError("expected ',' in bracket expression");
      ++pos;
      e.children.push_back(parse());
      skip();
      if (pos >= s.size() || s[pos] != ']') throw ParseError("expected ']' in bracket expression");
      ++pos;
      return e;
    }
    std::size_t start = pos;
    if (pos < s.size() && s[pos] == 'e') start = ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError("expected basis index in bracket expression");
    e.leaf = std::stoi(s.substr(start, pos - start));
    return e;
  }
};

}  // namespace

BracketExpr BracketExpr::parse(const std::string& text) {
  ExprParser p{text};
  BracketExpr e = p.parse();
  p.skip();
  if (p.pos != text.size()) throw ParseError("trailing characters in bracket expression");
  return e;
}

int BracketExpr::degree() const { return is_leaf() ? 1 : children[0].degree() + children[1].degree(); }

std::string BracketExpr::to_string() const {
  if (is_leaf()) return std::to_string(leaf);
  return "[" + children[0].to_string() + "," + children[1].to_string() + "]";
}

LieElement evaluate(const BasisContext& ctx, const BracketExpr& expr) {
  if (expr.is_leaf()) return LieElement::basis(ctx, expr.leaf);
  return bracket(evaluate(ctx, expr.children[0]), evaluate(ctx, expr.children[1]));
}

GradedDerivation pp(const BasisContext& ctx, const BracketExpr& expr) {
  if (expr.is_leaf()) return pp1(LieElement::basis(ctx, expr.leaf));
  return derivation_bracket(pp(ctx, expr.children[0]), pp(ctx, expr.children[1]));
}

}  // namespace workbench
