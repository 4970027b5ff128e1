#include "rp2braid/word.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rp2braid {

bool valid_generator(const Generator& gen, int strands) {
  if (gen.kind == GenKind::Sigma) return gen.index >= 1 && gen.index <= strands - 1;
  return gen.index >= 1 && gen.index <= strands;
}

bool letter_less(const Letter& a, const Letter& b) {
  if (a.gen != b.gen) return a.gen < b.gen;
  return a.exp > b.exp;  // +1 before -1
}

Word::Word(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("strand count must be positive");
  for (const Letter& l : letters_) {
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
    if (!valid_generator(l.gen, strands_))
      throw std::invalid_argument("generator out of range for strand count");
  }
}

bool Word::is_reduced() const {
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i)
    if (letters_[i].gen == letters_[i + 1].gen && letters_[i].exp == -letters_[i + 1].exp)
      return false;
  return true;
}

Word Word::append(const Letter& l) const {
  std::vector<Letter> ls = letters_;
  ls.push_back(l);
  return Word(strands_, std::move(ls));
}

std::string Word::packed_key() const {
  // Two bytes per letter: generator code, then sign byte.
  std::string key;
  key.reserve(2 * letters_.size());
  for (const Letter& l : letters_) {
    int code = l.gen.kind == GenKind::Sigma ? l.gen.index : strands_ + l.gen.index;
    key.push_back(static_cast<char>(code & 0xff));
    key.push_back(static_cast<char>(((code >> 8) & 0x7f) | (l.exp < 0 ? 0x80 : 0)));
  }
  return key;
}

Word freely_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters().size());
  for (const Letter& l : w.letters()) {
    if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(w.strands(), std::move(out));
}

Word multiply(const Word& u, const Word& v) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("cannot multiply words with different strand counts");
  std::vector<Letter> ls = u.letters();
  ls.insert(ls.end(), v.letters().begin(), v.letters().end());
  return freely_reduce(Word(u.strands(), std::move(ls)));
}

Word invert(const Word& w) {
  std::vector<Letter> ls;
  ls.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) ls.push_back(it->inverse());
  return freely_reduce(Word(w.strands(), std::move(ls)));
}

Word power(const Word& w, int k) {
  Word base = k >= 0 ? w : invert(w);
  int e = k >= 0 ? k : -k;
  Word acc(w.strands());
  for (int i = 0; i < e; ++i) acc = multiply(acc, base);
  return acc;
}

Permutation::Permutation(int n) : img_(static_cast<std::size_t>(n)) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p(n);
  std::swap(p.img_[static_cast<std::size_t>(i) - 1], p.img_[static_cast<std::size_t>(j) - 1]);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (image_of(i) != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out(size());
  for (int i = 1; i <= size(); ++i)
    out.img_[static_cast<std::size_t>(i) - 1] = next.image_of(image_of(i));
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(size());
  for (int i = 1; i <= size(); ++i) out.img_[static_cast<std::size_t>(image_of(i)) - 1] = i;
  return out;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<std::size_t>(size() + 1), false);
  for (int i = 1; i <= size(); ++i) {
    if (seen[static_cast<std::size_t>(i)] || image_of(i) == i) continue;
    std::vector<int> cyc;
    int x = i;
    do {
      cyc.push_back(x);
      seen[static_cast<std::size_t>(x)] = true;
      x = image_of(x);
    } while (x != i);
    out.push_back(std::move(cyc));
  }
  return out;
}

int Permutation::order() const {
  long long ord = 1;
  for (const auto& cyc : cycles()) ord = std::lcm(ord, static_cast<long long>(cyc.size()));
  return static_cast<int>(ord);
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "id";
  std::ostringstream os;
  for (const auto& cyc : cs) {
    os << '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) os << ' ';
      os << cyc[i];
    }
    os << ')';
  }
  return os.str();
}

Permutation permutation_of(const Word& w) {
  Permutation p(w.strands());
  for (const Letter& l : w.letters()) {
    if (l.gen.kind != GenKind::Sigma) continue;
    p = p.then(Permutation::transposition(w.strands(), l.gen.index, l.gen.index + 1));
  }
  return p;
}

AbelianImage abelianize(const Word& w) {
  int es = 0, er = 0;
  for (const Letter& l : w.letters()) {
    if (l.gen.kind == GenKind::Sigma)
      es ^= 1;
    else
      er ^= 1;
  }
  return {es, er};
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (a.letters()[i] == b.letters()[i]) continue;
    return letter_less(a.letters()[i], b.letters()[i]);
  }
  return false;
}

Letter sigma_letter(int i, int exp) { return {{GenKind::Sigma, i}, exp}; }
Letter rho_letter(int j, int exp) { return {{GenKind::Rho, j}, exp}; }

namespace {
Word single_generator_word(int strands, Generator g, int exp) {
  std::vector<Letter> ls;
  int sign = exp >= 0 ? 1 : -1;
  for (int t = 0; t < (exp >= 0 ? exp : -exp); ++t) ls.push_back({g, sign});
  return Word(strands, std::move(ls));
}
}  // namespace

Word sigma_word(int strands, int i, int exp) {
  return single_generator_word(strands, {GenKind::Sigma, i}, exp);
}
Word rho_word(int strands, int j, int exp) {
  return single_generator_word(strands, {GenKind::Rho, j}, exp);
}

Word parse_word(int strands, std::string_view text) {
  std::vector<Letter> ls;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "e" || tok == "1") continue;
    std::size_t caret = tok.find('^');
    std::string base = tok.substr(0, caret == std::string::npos ? tok.size() : caret);
    int exp = 1;
    if (caret != std::string::npos) {
      try {
        std::size_t used = 0;
        exp = std::stoi(tok.substr(caret + 1), &used);
        if (used != tok.size() - caret - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in token '" + tok + "'");
      }
    }
    if (base.size() < 2 || (base[0] != 's' && base[0] != 'r'))
      throw std::invalid_argument("bad generator token '" + tok + "'");
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(base.substr(1), &used);
      if (used != base.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad generator index in token '" + tok + "'");
    }
    Generator g{base[0] == 's' ? GenKind::Sigma : GenKind::Rho, index};
    if (!valid_generator(g, strands))
      throw std::invalid_argument("generator '" + base + "' out of range for n=" +
                                  std::to_string(strands));
    int sign = exp >= 0 ? 1 : -1;
    for (int t = 0; t < (exp >= 0 ? exp : -exp); ++t) ls.push_back({g, sign});
  }
  return Word(strands, std::move(ls));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < w.length()) {
    std::size_t j = i;
    while (j < w.length() && w.letters()[j] == w.letters()[i]) ++j;
    const Letter& l = w.letters()[i];
    int run = static_cast<int>(j - i) * l.exp;
    if (!first) os << ' ';
    first = false;
    os << (l.gen.kind == GenKind::Sigma ? 's' : 'r') << l.gen.index;
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

}  // namespace rp2braid
