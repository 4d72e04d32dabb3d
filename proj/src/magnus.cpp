#include "workbench/magnus.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "workbench/error.hpp"

namespace workbench {

namespace {

void check_cap(int cap) {
  if (cap < 1) throw DomainError("degree cap must be >= 1");
}

void check_modulus(long modulus) {
  if (modulus != 0 && !is_prime(modulus)) throw DomainError("modulus must be 0 or a prime, got " + std::to_string(modulus));
}

void accumulate(TruncatedSeries::Terms& terms, const IndexWord& m, Integer c, long modulus) {
  if (modulus != 0) c = mod_floor(c, Integer(modulus));
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (modulus != 0) it->second = mod_floor(it->second, Integer(modulus));
  if (it->second == 0) terms.erase(it);
}

// Dense accumulator: one flat array per degree, monomials indexed in base n
// with the first letter most significant, so appending letter i to monomial m
// lands at m * n + (i - 1).
class DenseExpansion {
 public:
  DenseExpansion(int rank, int cap, long modulus) : n_(rank), cap_(cap), modulus_(modulus) {
    std::size_t size = 1;
    for (int d = 0; d <= cap; ++d) {
      levels_.emplace_back(size, 0);
      size *= static_cast<std::size_t>(n_);
    }
    levels_[0][0] = 1;
  }

  static std::size_t footprint(int rank, int cap) {
    std::size_t total = 0, size = 1;
    for (int d = 0; d <= cap; ++d) {
      total += size;
      if (size > (std::size_t{1} << 40) / static_cast<std::size_t>(rank)) return SIZE_MAX;
      size *= static_cast<std::size_t>(rank);
    }
    return total;
  }

  // Returns false on int64 overflow (integer case only).
  bool apply(Letter l) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
    const std::size_t n = static_cast<std::size_t>(n_);
    if (l > 0) {
      for (int d = cap_; d >= 1; --d) {
        const auto& prev = levels_[static_cast<std::size_t>(d - 1)];
        auto& cur = levels_[static_cast<std::size_t>(d)];
        for (std::size_t m = 0; m < prev.size(); ++m) {
          const std::int64_t v = prev[m];
          if (v == 0) continue;
          std::int64_t& slot = cur[m * n + i];
          if (!add(slot, v)) return false;
        }
      }
    } else {
      for (int d = 1; d <= cap_; ++d) {
        const auto& prev = levels_[static_cast<std::size_t>(d - 1)];
        auto& cur = levels_[static_cast<std::size_t>(d)];
        for (std::size_t m = 0; m < prev.size(); ++m) {
          const std::int64_t v = prev[m];
          if (v == 0) continue;
          std::int64_t& slot = cur[m * n + i];
          if (!sub(slot, v)) return false;
        }
      }
    }
    return true;
  }

  TruncatedSeries::Terms terms() const {
    TruncatedSeries::Terms out;
    for (int d = 0; d <= cap_; ++d) {
      const auto& level = levels_[static_cast<std::size_t>(d)];
      for (std::size_t m = 0; m < level.size(); ++m) {
        if (level[m] == 0) continue;
        IndexWord word(static_cast<std::size_t>(d));
        std::size_t code = m;
        for (int j = d - 1; j >= 0; --j) {
          word[static_cast<std::size_t>(j)] = static_cast<int>(code % static_cast<std::size_t>(n_)) + 1;
          code /= static_cast<std::size_t>(n_);
        }
        out.emplace(std::move(word), from_int64(level[m]));
      }
    }
    return out;
  }

 private:
  bool add(std::int64_t& slot, std::int64_t v) const {
    if (modulus_ != 0) {
      slot = (slot + v) % modulus_;
      return true;
    }
    return !__builtin_add_overflow(slot, v, &slot);
  }
  bool sub(std::int64_t& slot, std::int64_t v) const {
    if (modulus_ != 0) {
      slot = (slot - v + modulus_) % modulus_;
      return true;
    }
    return !__builtin_sub_overflow(slot, v, &slot);
  }

  int n_;
  int cap_;
  long modulus_;
  std::vector<std::vector<std::int64_t>> levels_;
};

constexpr std::size_t kDenseLimit = std::size_t{1} << 23;

TruncatedSeries::Terms sparse_expand(const FreeWord& w, int cap, long modulus) {
  TruncatedSeries::Terms cur{{IndexWord{}, Integer(1)}};
  for (Letter l : w.letters()) {
    const int i = std::abs(l);
    TruncatedSeries::Terms next = cur;
    for (const auto& [m, c] : cur) {
      const int room = cap - static_cast<int>(m.size());
      if (room <= 0) continue;
      IndexWord mm = m;
      if (l > 0) {
        mm.push_back(i);
        accumulate(next, mm, c, modulus);
      } else {
        Integer coeff = -c;
        for (int j = 1; j <= room; ++j) {
          mm.push_back(i);
          accumulate(next, mm, coeff, modulus);
          coeff = -coeff;
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::string monomial_text(const IndexWord& m) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (j) out += ' ';
    out += 'X' + std::to_string(m[j]);
  }
  return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(int rank, int cap, long modulus) : rank_(rank), cap_(cap), modulus_(modulus) {
  if (rank < 1) throw DomainError("series rank must be positive");
  check_cap(cap);
  check_modulus(modulus);
}

TruncatedSeries TruncatedSeries::one(int rank, int cap, long modulus) {
  TruncatedSeries s(rank, cap, modulus);
  s.add_term({}, 1);
  return s;
}

TruncatedSeries TruncatedSeries::generator(int rank, int cap, int i, long modulus) {
  if (i < 1 || i > rank) throw DomainError("generator index out of range");
  TruncatedSeries s = one(rank, cap, modulus);
  s.add_term({i}, 1);
  return s;
}

Integer TruncatedSeries::coefficient(const IndexWord& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void TruncatedSeries::add_term(const IndexWord& m, const Integer& c) {
  if (static_cast<int>(m.size()) > cap_) return;
  for (int i : m)
    if (i < 1 || i > rank_) throw DomainError("monomial index out of range");
  accumulate(terms_, m, c, modulus_);
}

namespace {
void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.rank() != b.rank() || a.cap() != b.cap() || a.modulus() != b.modulus())
    throw DomainError("series with different rank, cap or modulus");
}
}  // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  check_compatible(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) accumulate(terms_, m, c, modulus_);
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  check_compatible(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) accumulate(terms_, m, -c, modulus_);
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  check_compatible(a, b);
  TruncatedSeries out(a.rank_, a.cap_, a.modulus_);
  IndexWord key;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      if (static_cast<int>(ma.size() + mb.size()) > a.cap_) continue;
      key = ma;
      key.insert(key.end(), mb.begin(), mb.end());
      accumulate(out.terms_, key, ca * cb, a.modulus_);
    }
  return out;
}

TruncatedSeries::Terms TruncatedSeries::homogeneous(int d) const {
  Terms out;
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.size()) == d) out.emplace(m, c);
  return out;
}

std::optional<int> TruncatedSeries::lowest_positive_degree() const {
  std::optional<int> best;
  for (const auto& [m, c] : terms_)
    if (!m.empty() && (!best || static_cast<int>(m.size()) < *best)) best = static_cast<int>(m.size());
  return best;
}

std::string TruncatedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<IndexWord, Integer>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& x, const auto& y) { return x.first.size() < y.first.size(); });
  std::string out;
  for (const auto& [m, c] : sorted) out += c.get_str() + " * " + monomial_text(m) + "\n";
  out.pop_back();
  return out;
}

TruncatedSeries expand(const FreeWord& w, int cap, long modulus) {
  TruncatedSeries s(w.rank(), cap, modulus);
  const std::size_t footprint = DenseExpansion::footprint(w.rank(), cap);
  bool done = false;
  if (w.length() >= 4 && footprint <= kDenseLimit) {
    DenseExpansion dense(w.rank(), cap, modulus);
    done = true;
    for (Letter l : w.letters())
      if (!dense.apply(l)) {
        done = false;
        break;
      }
    if (done)
      for (const auto& [m, c] : dense.terms()) s.add_term(m, c);
  }
  if (!done)
    for (const auto& [m, c] : sparse_expand(w, cap, modulus)) s.add_term(m, c);
  return s;
}

namespace {
FiltrationWeight weight_of(const TruncatedSeries& s) {
  const auto d = s.lowest_positive_degree();
  if (!d) return {s.cap() + 1, true};
  return {*d, false};
}
}  // namespace

FiltrationWeight lcs_weight(const FreeWord& w, int cap) {
  check_cap(cap);
  return weight_of(expand(w, cap, 0));
}

FiltrationWeight zassenhaus_weight(const FreeWord& w, long p, int cap) {
  check_cap(cap);
  if (!is_prime(p)) throw DomainError("zassenhaus_weight needs a prime, got " + std::to_string(p));
  return weight_of(expand(w, cap, p));
}

HomTensor homogeneous_tensor(const TruncatedSeries& s, int d) {
  if (s.modulus() != 0) throw DomainError("tensors are defined over the integers only");
  HomTensor t(BasisContext(s.rank()), d);
  for (const auto& [m, c] : s.homogeneous(d)) t.add_term(m, c);
  return t;
}

HomTensor leading_part(const FreeWord& w, int cap) {
  check_cap(cap);
  const TruncatedSeries s = expand(w, cap, 0);
  const FiltrationWeight k = weight_of(s);
  if (k.at_least) throw DomainError("weight exceeds the cap " + std::to_string(cap));
  return homogeneous_tensor(s, k.value);
}

}  // namespace workbench
