#include "rp2braid/kernel_action.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace rp2braid {

FreeWord FreeWord::from_letters(int rank, const std::vector<std::int16_t>& letters) {
  FreeWord w(rank);
  for (std::int16_t l : letters) {
    if (l == 0 || l > rank || l < -rank) throw std::invalid_argument("letter out of rank range");
    if (!w.letters_.empty() && w.letters_.back() == -l)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

FreeWord FreeWord::generator(int rank, int g, int exp) {
  if (g < 0 || g >= rank) throw std::invalid_argument("generator out of range");
  FreeWord w(rank);
  std::int16_t l = static_cast<std::int16_t>(exp >= 0 ? g + 1 : -(g + 1));
  for (int t = 0; t < (exp >= 0 ? exp : -exp); ++t) w.letters_.push_back(l);
  return w;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("rank mismatch");
  FreeWord w = *this;
  for (std::int16_t l : o.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -l)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w(rank_);
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(static_cast<std::int16_t>(-*it));
  return w;
}

FreeWord FreeWord::pow(int k) const {
  FreeWord base = k >= 0 ? *this : inverse();
  int e = k >= 0 ? k : -k;
  FreeWord acc(rank_);
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

bool FreeWord::contains_generator(int g) const {
  for (std::int16_t l : letters_)
    if (l == g + 1 || l == -(g + 1)) return true;
  return false;
}

FreeAut::FreeAut(std::vector<FreeWord> images, std::vector<FreeWord> inverse_images)
    : rank_(static_cast<int>(images.size())), images_(std::move(images)),
      inverse_images_(std::move(inverse_images)) {
  if (images_.size() != inverse_images_.size())
    throw std::invalid_argument("image table sizes differ");
  for (int g = 0; g < rank_; ++g) {
    const FreeWord gen = FreeWord::generator(rank_, g);
    if (apply(inverse_images_[static_cast<std::size_t>(g)]) != gen ||
        apply_inverse(images_[static_cast<std::size_t>(g)]) != gen)
      throw std::invalid_argument("images and inverse images do not certify an automorphism");
  }
}

FreeAut FreeAut::identity(int rank) {
  std::vector<FreeWord> im;
  for (int g = 0; g < rank; ++g) im.push_back(FreeWord::generator(rank, g));
  auto im2 = im;
  return FreeAut(std::move(im), std::move(im2));
}

FreeAut FreeAut::inner(int rank, const FreeWord& c) {
  std::vector<FreeWord> im, inv;
  for (int g = 0; g < rank; ++g) {
    FreeWord gen = FreeWord::generator(rank, g);
    im.push_back(c * gen * c.inverse());
    inv.push_back(c.inverse() * gen * c);
  }
  return FreeAut(std::move(im), std::move(inv));
}

namespace {
FreeWord substitute(const std::vector<FreeWord>& table, int rank, const FreeWord& w) {
  FreeWord out(rank);
  for (std::int16_t l : w.letters()) {
    const FreeWord& im = table[static_cast<std::size_t>(std::abs(l) - 1)];
    out = out * (l > 0 ? im : im.inverse());
  }
  return out;
}
}  // namespace

FreeWord FreeAut::apply(const FreeWord& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("rank mismatch");
  return substitute(images_, rank_, w);
}

FreeWord FreeAut::apply_inverse(const FreeWord& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("rank mismatch");
  return substitute(inverse_images_, rank_, w);
}

FreeAut FreeAut::inverse() const {
  auto inv = inverse_images_;
  auto im = images_;
  return FreeAut(std::move(inv), std::move(im));
}

FreeAut FreeAut::compose(const FreeAut& inner_first) const {
  if (rank_ != inner_first.rank_) throw std::invalid_argument("rank mismatch");
  std::vector<FreeWord> im, inv;
  for (int g = 0; g < rank_; ++g) {
    im.push_back(apply(inner_first.image(g)));
    inv.push_back(inner_first.apply_inverse(inverse_image(g)));
  }
  return FreeAut(std::move(im), std::move(inv));
}

bool FreeAut::is_identity_on_generators() const {
  for (int g = 0; g < rank_; ++g)
    if (image(g) != FreeWord::generator(rank_, g)) return false;
  return true;
}

namespace {

// B_1 .. B_{i-1} B_i^-1 B_{i-1}^-1 .. B_1^-1 in the kernel context, where
// generator index of B_t is `first + t - 1`.
FreeWord conjugated_inverse(int rank, int first, int i) {
  FreeWord w(rank);
  for (int t = 1; t <= i - 1; ++t) w = w * FreeWord::generator(rank, first + t - 1);
  w = w * FreeWord::generator(rank, first + i - 1, -1);
  for (int t = i - 1; t >= 1; --t) w = w * FreeWord::generator(rank, first + t - 1, -1);
  return w;
}

}  // namespace

FreeAut phi(int n) {
  if (n < 1) throw std::invalid_argument("phi needs n >= 1");
  const int rank = n;
  std::vector<FreeWord> im;
  im.push_back(FreeWord::generator(rank, 0, -1));  // rho -> rho^-1
  for (int i = 1; i <= n - 1; ++i) im.push_back(conjugated_inverse(rank, 1, i));
  auto inv = im;  // phi is an involution; certification checks it
  return FreeAut(std::move(im), std::move(inv));
}

namespace {
FreeAut conj_by_rho_power(int n, int e) {
  FreeAut base = phi(n);
  FreeAut tw = FreeAut::inner(n, FreeWord::generator(n, 0, e));
  return tw.compose(base);
}
}  // namespace

FreeAut conj_alpha_inv(int n) { return conj_by_rho_power(n, 2); }
FreeAut conj_beta_inv(int n) { return conj_by_rho_power(n, 1); }

FreeAut phi_prime(int n) {
  if (n < 2) throw std::invalid_argument("phi' needs n >= 2");
  const int rank = n - 1;  // generators B_1 .. B_{n-1}
  std::vector<FreeWord> im;
  im.push_back(FreeWord::generator(rank, 0, -1));  // B_1 -> B_1^-1
  for (int i = 2; i <= n - 1; ++i) {
    // B_2 .. B_{i-1} B_i^-1 B_{i-1}^-1 .. B_2^-1; generator index of B_t is t-1
    FreeWord w(rank);
    for (int t = 2; t <= i - 1; ++t) w = w * FreeWord::generator(rank, t - 1);
    w = w * FreeWord::generator(rank, i - 1, -1);
    for (int t = i - 1; t >= 2; --t) w = w * FreeWord::generator(rank, t - 1, -1);
    im.push_back(w);
  }
  auto inv = im;
  return FreeAut(std::move(im), std::move(inv));
}

FreeWord embed_k_into_kernel(const FreeWord& w) {
  std::vector<std::int16_t> ls;
  ls.reserve(w.length());
  for (std::int16_t l : w.letters())
    ls.push_back(static_cast<std::int16_t>(l > 0 ? l + 1 : l - 1));
  return FreeWord::from_letters(w.rank() + 1, ls);
}

FreeWord restrict_kernel_to_k(const FreeWord& w) {
  std::vector<std::int16_t> ls;
  ls.reserve(w.length());
  for (std::int16_t l : w.letters()) {
    if (l == 1 || l == -1) throw std::invalid_argument("word mentions rho");
    ls.push_back(static_cast<std::int16_t>(l > 0 ? l - 1 : l + 1));
  }
  return FreeWord::from_letters(w.rank() - 1, ls);
}

SyllableDecomposition syllable_decompose(const FreeWord& w, int g) {
  if (g < 0 || g >= w.rank()) throw std::invalid_argument("generator out of range");
  SyllableDecomposition out;
  out.generator = g;
  const std::int16_t pos = static_cast<std::int16_t>(g + 1);

  std::vector<std::pair<bool, std::pair<long long, FreeWord>>> runs;  // (is_g, payload)
  std::size_t i = 0;
  while (i < w.length()) {
    std::int16_t l = w.letters()[i];
    if (l == pos || l == -pos) {
      long long e = 0;
      while (i < w.length() && (w.letters()[i] == pos || w.letters()[i] == -pos)) {
        e += w.letters()[i] == pos ? 1 : -1;
        ++i;
      }
      runs.push_back({true, {e, FreeWord(w.rank())}});
    } else {
      std::vector<std::int16_t> mid;
      while (i < w.length() && w.letters()[i] != pos && w.letters()[i] != -pos)
        mid.push_back(w.letters()[i++]);
      runs.push_back({false, {0, FreeWord::from_letters(w.rank(), mid)}});
    }
  }

  if (runs.empty()) {  // empty word: pure power g^0
    out.exponents.push_back(0);
    return out;
  }
  if (runs.size() == 1 && runs[0].first) {  // pure power
    out.exponents.push_back(runs[0].second.first);
    return out;
  }

  // alternating form: leading/trailing exponents may be absent (then 0)
  std::size_t at = 0;
  if (runs[at].first) {
    out.exponents.push_back(runs[at].second.first);
    ++at;
  } else {
    out.exponents.push_back(0);
  }
  while (at < runs.size()) {
    out.middles.push_back(runs[at].second.second);  // a middle, by alternation
    ++at;
    if (at < runs.size()) {
      out.exponents.push_back(runs[at].second.first);
      ++at;
    } else {
      out.exponents.push_back(0);
    }
  }
  return out;
}

FreeWord SyllableDecomposition::reassemble(int rank) const {
  FreeWord w(rank);
  for (std::size_t j = 0; j <= middles.size(); ++j) {
    long long e = exponents[j];
    w = w * FreeWord::generator(rank, generator, static_cast<int>(e));
    if (j < middles.size()) w = w * middles[j];
  }
  return w;
}

std::vector<FreeWord> fixed_points_ball(const FreeAut& aut, int radius) {
  const int rank = aut.rank();
  std::vector<std::int16_t> order;
  for (int g = 0; g < rank; ++g) {
    order.push_back(static_cast<std::int16_t>(g + 1));
    order.push_back(static_cast<std::int16_t>(-(g + 1)));
  }
  std::vector<FreeWord> out;
  out.push_back(FreeWord(rank));  // the empty word is fixed by every automorphism

  std::vector<std::int16_t> cur;
  std::vector<std::size_t> choice;
  for (int len = 1; len <= radius; ++len) {
    cur.clear();
    choice.assign(static_cast<std::size_t>(len), 0);
    int depth = 0;
    while (depth >= 0) {
      if (depth == len) {
        FreeWord w = FreeWord::from_letters(rank, cur);
        if (aut.apply(w) == w) out.push_back(w);
        --depth;
        cur.pop_back();
        continue;
      }
      std::size_t& c = choice[static_cast<std::size_t>(depth)];
      bool advanced = false;
      while (c < order.size()) {
        std::int16_t letter = order[c];
        ++c;
        if (!cur.empty() && cur.back() == -letter) continue;
        cur.push_back(letter);
        ++depth;
        if (depth < len) choice[static_cast<std::size_t>(depth)] = 0;
        advanced = true;
        break;
      }
      if (!advanced) {
        c = 0;
        --depth;
        if (!cur.empty()) cur.pop_back();
      }
    }
  }
  return out;
}

namespace {
std::string format_free_word(const FreeWord& w, bool k_context) {
  if (w.empty()) return "e";
  std::ostringstream os;
  std::size_t i = 0;
  while (i < w.length()) {
    std::size_t j = i;
    while (j < w.length() && w.letters()[j] == w.letters()[i]) ++j;
    std::int16_t l = w.letters()[i];
    int g = std::abs(l) - 1;
    if (i) os << ' ';
    if (!k_context && g == 0)
      os << 'r';
    else
      os << 'B' << (k_context ? g + 1 : g);
    int run = static_cast<int>(j - i) * (l > 0 ? 1 : -1);
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}
}  // namespace

std::string format_kernel_word(const FreeWord& w) { return format_free_word(w, false); }
std::string format_k_word(const FreeWord& w) { return format_free_word(w, true); }

FreeWord parse_kernel_word(int rank, std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  std::vector<std::int16_t> ls;
  while (is >> tok) {
    if (tok == "e" || tok == "1") continue;
    std::size_t caret = tok.find('^');
    std::string base = tok.substr(0, caret == std::string::npos ? tok.size() : caret);
    int exp = 1;
    if (caret != std::string::npos) {
      try {
        exp = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in token '" + tok + "'");
      }
    }
    int g;
    if (base == "r") {
      g = 0;
    } else if (base.size() >= 2 && base[0] == 'B') {
      try {
        g = std::stoi(base.substr(1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad generator token '" + tok + "'");
      }
      if (g < 1 || g > rank - 1)
        throw std::invalid_argument("generator index out of range in '" + tok + "'");
    } else {
      throw std::invalid_argument("bad generator token '" + tok + "'");
    }
    std::int16_t l = static_cast<std::int16_t>(exp >= 0 ? g + 1 : -(g + 1));
    for (int t = 0; t < (exp >= 0 ? exp : -exp); ++t) ls.push_back(l);
  }
  return FreeWord::from_letters(rank, ls);
}

}  // namespace rp2braid
