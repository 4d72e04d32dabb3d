#include "workbench/words.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "workbench/error.hpp"

namespace workbench {

namespace {

void check_rank(int rank) {
  if (rank < 1) throw DomainError("free group rank must be positive");
}

// Appends letters onto a reduced stack, cancelling as it goes.
void push_reduced(std::vector<Letter>& stack, Letter l) {
  if (!stack.empty() && stack.back() == -l)
    stack.pop_back();
  else
    stack.push_back(l);
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

int parse_index(std::string_view digits, std::string_view token) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
    throw ParseError("bad generator token '" + std::string(token) + "'");
  return value;
}

Letter parse_letter(std::string_view token) {
  if (token.size() < 2 || token[0] != 'x') throw ParseError("bad generator token '" + std::string(token) + "'");
  std::string_view body = token.substr(1);
  int sign = 1;
  if (body.size() > 3 && body.substr(body.size() - 3) == "^-1") {
    sign = -1;
    body.remove_suffix(3);
  }
  return sign * parse_index(body, token);
}

}  // namespace

FreeWord FreeWord::reduce(std::span<const Letter> letters, int rank) {
  check_rank(rank);
  FreeWord w(rank);
  w.letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (l == 0 || l > rank || -l > rank)
      throw DomainError("generator index " + std::to_string(l < 0 ? -l : l) + " out of range 1.." +
                        std::to_string(rank));
    push_reduced(w.letters_, l);
  }
  return w;
}

FreeWord FreeWord::generator(int rank, int i) {
  const Letter l = i;
  return reduce(std::span<const Letter>(&l, 1), rank);
}

FreeWord FreeWord::parse(std::string_view text, int rank) {
  check_rank(rank);
  text = trim(text);
  if (text == "1") return FreeWord(rank);
  if (text.empty()) throw ParseError("empty word text (the identity is spelled '1')");
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = text.find_first_of(" \t", pos);
    if (end == std::string_view::npos) end = text.size();
    letters.push_back(parse_letter(text.substr(pos, end - pos)));
    pos = end;
  }
  return reduce(letters, rank);
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ' ';
    const Letter l = letters_[i];
    out += 'x';
    out += std::to_string(l < 0 ? -l : l);
    if (l < 0) out += "^-1";
  }
  return out;
}

std::vector<Integer> FreeWord::exponent_sums() const {
  std::vector<long> sums(static_cast<std::size_t>(rank_), 0);
  for (Letter l : letters_) sums[static_cast<std::size_t>((l < 0 ? -l : l) - 1)] += (l < 0 ? -1 : 1);
  return {sums.begin(), sums.end()};
}

FreeWord multiply(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) throw DomainError("rank mismatch in multiply");
  std::vector<Letter> out(u.letters().begin(), u.letters().end());
  out.reserve(u.length() + v.length());
  for (Letter l : v.letters()) push_reduced(out, l);
  return FreeWord::reduce(out, u.rank());
}

FreeWord invert(const FreeWord& u) {
  std::vector<Letter> out;
  out.reserve(u.length());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) out.push_back(-*it);
  return FreeWord::reduce(out, u.rank());
}

FreeWord commutator(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) throw DomainError("rank mismatch in commutator");
  return multiply(multiply(invert(u), invert(v)), multiply(u, v));
}

FreeWord conjugate(const FreeWord& u, const FreeWord& v) {
  if (u.rank() != v.rank()) throw DomainError("rank mismatch in conjugate");
  return multiply(multiply(invert(v), u), v);
}

FreeWord power(const FreeWord& u, long e) {
  const FreeWord base = e < 0 ? invert(u) : u;
  FreeWord out = FreeWord::identity(u.rank());
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out = multiply(out, base);
  return out;
}

FreeWord left_normed_commutator(std::span<const FreeWord> words) {
  if (words.empty()) throw DomainError("left-normed commutator of no words");
  FreeWord acc = words.front();
  for (std::size_t i = 1; i < words.size(); ++i) acc = commutator(acc, words[i]);
  return acc;
}

// ---------------------------------------------------------------------------

Endomorphism::Endomorphism(std::vector<FreeWord> images, std::optional<std::vector<FreeWord>> inverse, Unchecked)
    : images_(std::move(images)), inverse_(std::move(inverse)) {}

Endomorphism::Endomorphism(std::vector<FreeWord> images) : images_(std::move(images)) {
  if (images_.empty()) throw DomainError("endomorphism needs at least one generator");
  for (const auto& w : images_)
    if (w.rank() != rank()) throw DomainError("image rank differs from the number of generators");
}

Endomorphism::Endomorphism(std::vector<FreeWord> images, std::vector<FreeWord> inverse_images)
    : Endomorphism(std::move(images)) {
  if (inverse_images.size() != images_.size()) throw DomainError("inverse data has the wrong number of generators");
  for (const auto& w : inverse_images)
    if (w.rank() != rank()) throw DomainError("inverse image rank mismatch");
  const Endomorphism back(inverse_images);
  for (int i = 1; i <= rank(); ++i) {
    const FreeWord x = FreeWord::generator(rank(), i);
    if (apply(back.apply(x)) != x || back.apply(apply(x)) != x)
      throw DomainError("supplied inverse does not invert the map at x" + std::to_string(i));
  }
  inverse_ = std::move(inverse_images);
}

Endomorphism Endomorphism::identity(int rank) {
  check_rank(rank);
  std::vector<FreeWord> gens;
  for (int i = 1; i <= rank; ++i) gens.push_back(FreeWord::generator(rank, i));
  return Endomorphism(gens, gens, Unchecked{});
}

Endomorphism Endomorphism::conjugation(const FreeWord& w) {
  const FreeWord wi = invert(w);
  std::vector<FreeWord> fwd;
  std::vector<FreeWord> back;
  for (int i = 1; i <= w.rank(); ++i) {
    const FreeWord x = FreeWord::generator(w.rank(), i);
    fwd.push_back(multiply(multiply(w, x), wi));
    back.push_back(multiply(multiply(wi, x), w));
  }
  return Endomorphism(std::move(fwd), std::move(back), Unchecked{});
}

Endomorphism Endomorphism::inverse() const {
  if (!inverse_) throw DomainError("endomorphism carries no inverse data");
  return Endomorphism(*inverse_, images_, Unchecked{});
}

FreeWord Endomorphism::apply(const FreeWord& w) const {
  if (w.rank() != rank()) throw DomainError("rank mismatch in apply_endo");
  std::size_t total = 0;
  for (Letter l : w.letters()) total += images_[static_cast<std::size_t>((l < 0 ? -l : l) - 1)].length();
  std::vector<Letter> out;
  out.reserve(total);
  for (Letter l : w.letters()) {
    const auto letters = images_[static_cast<std::size_t>((l < 0 ? -l : l) - 1)].letters();
    if (l > 0) {
      for (Letter m : letters) push_reduced(out, m);
    } else {
      for (auto it = letters.rbegin(); it != letters.rend(); ++it) push_reduced(out, -*it);
    }
  }
  return FreeWord::reduce(out, rank());
}

bool Endomorphism::supported_on(std::span<const int> support) const {
  auto inside = [&](int i) { return std::find(support.begin(), support.end(), i) != support.end(); };
  for (int i = 1; i <= rank(); ++i) {
    const FreeWord& img = image(i);
    if (!inside(i)) {
      if (img != FreeWord::generator(rank(), i)) return false;
      continue;
    }
    for (Letter l : img.letters())
      if (!inside(l < 0 ? -l : l)) return false;
  }
  return true;
}

std::string Endomorphism::to_string() const {
  std::ostringstream os;
  for (int i = 1; i <= rank(); ++i) os << 'x' << i << " -> " << image(i).to_string() << '\n';
  if (inverse_) {
    os << "# inverse\n";
    for (int i = 1; i <= rank(); ++i)
      os << 'x' << i << " -> " << (*inverse_)[static_cast<std::size_t>(i - 1)].to_string() << '\n';
  }
  return os.str();
}

Endomorphism Endomorphism::parse(std::string_view text) {
  struct Section {
    std::vector<std::pair<int, std::string>> lines;
  };
  Section forward;
  Section backward;
  Section* current = &forward;
  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    ++lineno;
    pos = end + 1;
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (line[0] == '#') {
      std::string_view rest = trim(line.substr(1));
      if (rest == "inverse") {
        if (current == &backward) throw ParseError("duplicate '# inverse' section");
        current = &backward;
      }
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'x<k> -> <word>'");
    const Letter head = parse_letter(trim(line.substr(0, arrow)));
    if (head <= 0) throw ParseError("line " + std::to_string(lineno) + ": left side must be a generator");
    current->lines.emplace_back(head, std::string(trim(line.substr(arrow + 2))));
    if (end == text.size()) break;
  }
  const int rank = static_cast<int>(forward.lines.size());
  if (rank == 0) throw ParseError("endomorphism file defines no generators");
  auto build = [rank](const Section& s) {
    std::vector<std::optional<FreeWord>> slots(static_cast<std::size_t>(rank));
    for (const auto& [gen, word] : s.lines) {
      if (gen > rank) throw ParseError("generator x" + std::to_string(gen) + " exceeds rank " + std::to_string(rank));
      auto& slot = slots[static_cast<std::size_t>(gen - 1)];
      if (slot) throw ParseError("generator x" + std::to_string(gen) + " defined twice");
      try {
        slot = FreeWord::parse(word, rank);
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
    }
    std::vector<FreeWord> out;
    for (int i = 0; i < rank; ++i) {
      if (!slots[static_cast<std::size_t>(i)]) throw ParseError("missing image for x" + std::to_string(i + 1));
      out.push_back(*slots[static_cast<std::size_t>(i)]);
    }
    return out;
  };
  std::vector<FreeWord> images = build(forward);
  if (backward.lines.empty()) return Endomorphism(std::move(images));
  if (static_cast<int>(backward.lines.size()) != rank) throw ParseError("inverse section has the wrong size");
  return Endomorphism(std::move(images), build(backward));
}

FreeWord apply_endo(const Endomorphism& e, const FreeWord& w) { return e.apply(w); }

Endomorphism compose(const Endomorphism& e1, const Endomorphism& e2) {
  if (e1.rank() != e2.rank()) throw DomainError("rank mismatch in compose");
  std::vector<FreeWord> images;
  images.reserve(e2.images_.size());
  for (const auto& w : e2.images_) images.push_back(e1.apply(w));
  std::optional<std::vector<FreeWord>> inverse;
  if (e1.inverse_ && e2.inverse_) {
    const Endomorphism inv2(*e2.inverse_, std::nullopt, Endomorphism::Unchecked{});
    std::vector<FreeWord> inv;
    for (const auto& w : *e1.inverse_) inv.push_back(inv2.apply(w));
    inverse = std::move(inv);
  }
  return Endomorphism(std::move(images), std::move(inverse), Endomorphism::Unchecked{});
}

Endomorphism commutator(const Endomorphism& a, const Endomorphism& b) {
  return compose(compose(a.inverse(), b.inverse()), compose(a, b));
}

Matrix abelianize(const Endomorphism& e) {
  const auto n = static_cast<std::size_t>(e.rank());
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto col = e.images()[i].exponent_sums();
    for (std::size_t r = 0; r < n; ++r) m(r, i) = col[r];
  }
  return m;
}

}  // namespace workbench
