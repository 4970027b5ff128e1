#pragma once

#include <string>
#include <vector>

#include "rp2braid/word.hpp"

namespace rp2braid {

/// A positive permutation braid (simple element) on m strands, identified
/// with its strand permutation: img(i) = final position of the strand that
/// starts at position i. Every permutation is the permutation of exactly one
/// simple braid, so no further data is needed.
class PermutationBraid {
 public:
  explicit PermutationBraid(int m);  // identity
  static PermutationBraid generator(int m, int i);
  static PermutationBraid half_twist(int m);  // i -> m+1-i

  int size() const { return static_cast<int>(img_.size()); }
  int image_of(int i) const { return img_[static_cast<std::size_t>(i) - 1]; }
  bool is_identity() const;
  bool is_half_twist() const;

  /// Starting set S(A): i such that A can be written starting with sigma_i.
  std::vector<int> starting_set() const;
  /// Finishing set F(A): i such that A can be written ending with sigma_i.
  std::vector<int> finishing_set() const;
  bool finishes_with(int i) const;
  bool starts_with(int i) const;

  PermutationBraid append_generator(int i) const;   // A sigma_i (requires i not in F(A))
  PermutationBraid strip_generator(int i) const;    // sigma_i^-1 A (requires i in S(A))
  PermutationBraid tau() const;                     // Delta^-1 A Delta

  /// Length in generators = number of inversions of the permutation.
  int canonical_length() const;

  std::string str() const;  // "[2 1 3]" image row

  friend bool operator==(const PermutationBraid&, const PermutationBraid&) = default;

 private:
  std::vector<int> img_;
};

/// Garside left canonical form: Delta^k A_1 ... A_r with each A_i a simple
/// element, none trivial or Delta, and every adjacent pair left-weighted.
struct GarsideNF {
  int halftwist_power = 0;
  std::vector<PermutationBraid> factors;

  friend bool operator==(const GarsideNF&, const GarsideNF&) = default;
};

/// Left canonical form of a sigma-only word on m strands. Throws
/// std::invalid_argument if the word contains a rho letter or uses more
/// strands than m permits.
GarsideNF left_normal_form(const Word& w, int m);

/// Equality in the Artin braid group B_m. A true answer transfers to
/// B_m(RP^2) along the inclusion-induced homomorphism; a false answer is only
/// "no certificate" there, since that homomorphism is not injective.
bool artin_equal(const Word& u, const Word& v, int m);

/// The band generator B_{i,m} = sigma_{m-1} .. sigma_{i+1} sigma_i^2
/// sigma_{i+1}^-1 .. sigma_{m-1}^-1 as a literal word on m strands.
Word b_generator(int i, int m);

std::string format_nf(const GarsideNF& nf);

}  // namespace rp2braid
