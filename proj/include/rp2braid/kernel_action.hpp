#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rp2braid {

/// A freely reduced word in a free group of the given rank. Letters are
/// +-(g+1) for generator g in [0, rank). Two naming contexts are used by the
/// callers: the kernel context (generator 0 is rho, generator i is B_i) and
/// the K context (generator i-1 is B_i).
class FreeWord {
 public:
  explicit FreeWord(int rank) : rank_(rank) {}
  static FreeWord from_letters(int rank, const std::vector<std::int16_t>& letters);
  static FreeWord generator(int rank, int g, int exp = 1);

  int rank() const { return rank_; }
  const std::vector<std::int16_t>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  FreeWord operator*(const FreeWord& o) const;  // throws on rank mismatch
  FreeWord inverse() const;
  FreeWord pow(int k) const;
  bool contains_generator(int g) const;

  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  int rank_;
  std::vector<std::int16_t> letters_;
};

/// Certified automorphism of a free group: images and inverse images are
/// stored together and both compositions are checked to be the identity on
/// generators at construction.
class FreeAut {
 public:
  FreeAut(std::vector<FreeWord> images, std::vector<FreeWord> inverse_images);
  static FreeAut identity(int rank);
  static FreeAut inner(int rank, const FreeWord& c);  // w -> c w c^-1

  int rank() const { return rank_; }
  const FreeWord& image(int g) const { return images_[static_cast<std::size_t>(g)]; }
  const FreeWord& inverse_image(int g) const {
    return inverse_images_[static_cast<std::size_t>(g)];
  }

  FreeWord apply(const FreeWord& w) const;
  FreeWord apply_inverse(const FreeWord& w) const;
  FreeAut inverse() const;
  /// compose(a).apply(w) = this->apply(a.apply(w))
  FreeAut compose(const FreeAut& inner_first) const;
  bool is_identity_on_generators() const;

 private:
  int rank_;
  std::vector<FreeWord> images_, inverse_images_;
};

// Kernel context, rank n: generator 0 = rho (rho_{n+1} upstairs), generator
// i = B_i (B_{i,n+1} upstairs).

/// phi: rho -> rho^-1, B_i -> B_1 .. B_{i-1} B_i^-1 B_{i-1}^-1 .. B_1^-1.
FreeAut phi(int n);
/// Conjugation by alpha^-1 on the kernel basis: iota_{rho^2} after phi.
FreeAut conj_alpha_inv(int n);
/// Conjugation by beta^-1: iota_rho after phi.
FreeAut conj_beta_inv(int n);

// K context, rank n-1: generator i-1 = B_i.

/// phi': B_1 -> B_1^-1, B_i -> B_2 .. B_{i-1} B_i^-1 B_{i-1}^-1 .. B_2^-1,
/// with iota_{B_1} o phi' = phi restricted to K.
FreeAut phi_prime(int n);
/// K-context word into the kernel context (B_i letters shift up by one).
FreeWord embed_k_into_kernel(const FreeWord& w);
/// Restriction of a kernel-context automorphism image to the K context;
/// throws if the word mentions rho.
FreeWord restrict_kernel_to_k(const FreeWord& w);

/// Maximal-run decomposition of w with respect to generator g:
///   w = g^{e_0} m_1 g^{e_1} m_2 ... m_k g^{e_k}
/// with every middle m_j nonempty and g-free and every interior exponent
/// nonzero. A pure power has k = 0; a g-free nonempty word is returned as
/// k = 1 with e_0 = e_1 = 0.
struct SyllableDecomposition {
  int generator;
  std::vector<long long> exponents;  // k+1 entries
  std::vector<FreeWord> middles;     // k entries

  int syllable_count() const { return static_cast<int>(middles.size()); }
  FreeWord reassemble(int rank) const;
};

SyllableDecomposition syllable_decompose(const FreeWord& w, int g);

/// All reduced words of length <= radius with aut(w) = w, shortlex order
/// (generator 0 positive < negative < generator 1 positive < ...).
std::vector<FreeWord> fixed_points_ball(const FreeAut& aut, int radius);

// Text grammar for kernel-context words: tokens `r` and `B<i>` with optional
// `^<int>`; `e` for the empty word. The K context uses only `B<i>` tokens.
std::string format_kernel_word(const FreeWord& w);
FreeWord parse_kernel_word(int rank, std::string_view text);
std::string format_k_word(const FreeWord& w);

}  // namespace rp2braid
