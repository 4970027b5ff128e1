#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rp2braid {

/// Generator of B_n(RP^2): sigma_i (1 <= i <= n-1) or rho_j (1 <= j <= n).
enum class GenKind : std::uint8_t { Sigma = 0, Rho = 1 };

struct Generator {
  GenKind kind;
  int index;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// One signed letter. Exponents are always +1 or -1; powers are spelled out.
struct Letter {
  Generator gen;
  int exp;

  Letter inverse() const { return {gen, -exp}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Canonical letter order: sigma_1 < ... < sigma_{n-1} < rho_1 < ... < rho_n,
/// positive letter before negative.
bool letter_less(const Letter& a, const Letter& b);

class Permutation {
 public:
  explicit Permutation(int n);  // identity
  static Permutation transposition(int n, int i, int j);

  int size() const { return static_cast<int>(img_.size()); }
  int image_of(int i) const { return img_[static_cast<std::size_t>(i) - 1]; }
  bool is_identity() const;
  int order() const;

  /// Composition "this then next": strand positions flow left to right.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;

  /// Nontrivial cycles, each starting at its least element, sorted by least
  /// element. Fixed points omitted.
  std::vector<std::vector<int>> cycles() const;
  std::string cycle_string() const;  // "(1 3 2)" or "id"

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;  // img_[i-1] = image of strand i
};

/// Image in the abelianisation Z_2 x Z_2 (sigma-parity, rho-parity).
struct AbelianImage {
  int eps_sigma;
  int eps_rho;

  friend bool operator==(const AbelianImage&, const AbelianImage&) = default;
};

/// A word over the braid generators of B_n(RP^2). The strand count travels
/// with the word; every letter is validated against it. Words are plain
/// letter sequences; use freely_reduce for the reduced representative.
class Word {
 public:
  explicit Word(int strands, std::vector<Letter> letters = {});

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_reduced() const;

  Word append(const Letter& l) const;

  /// Compact byte key for hashing; unique per letter sequence.
  std::string packed_key() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// True iff gen is a valid generator for the given strand count.
bool valid_generator(const Generator& gen, int strands);

Word freely_reduce(const Word& w);
Word multiply(const Word& u, const Word& v);  // throws on strand mismatch
Word invert(const Word& w);
Word power(const Word& w, int k);

Permutation permutation_of(const Word& w);
AbelianImage abelianize(const Word& w);

/// Shortlex order on reduced words under the canonical letter order.
bool shortlex_less(const Word& a, const Word& b);

// Convenience constructors.
Word sigma_word(int strands, int i, int exp = 1);
Word rho_word(int strands, int j, int exp = 1);
Letter sigma_letter(int i, int exp = 1);
Letter rho_letter(int j, int exp = 1);

/// Text grammar: whitespace-separated tokens `s<i>` / `r<j>`, each with an
/// optional `^<integer>` exponent; `e` denotes the empty word.
Word parse_word(int strands, std::string_view text);  // throws std::invalid_argument

/// Run-compressed display form, e.g. "s2^-1 s1^2 r1"; empty word prints "e".
std::string format_word(const Word& w);

}  // namespace rp2braid
