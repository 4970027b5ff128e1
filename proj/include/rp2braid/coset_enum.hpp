#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rp2braid/presentation.hpp"
#include "rp2braid/word.hpp"

namespace rp2braid {

/// Result of a Todd-Coxeter enumeration. A complete table is closed: every
/// (coset, signed generator) entry is defined, coset 1 is the subgroup coset,
/// and every relator traces to a closed cycle at every coset. Cosets are
/// numbered 1..index in definition order.
class CosetTable {
 public:
  enum class Status { Complete, Overflow };

  CosetTable(Presentation p, std::vector<Word> subgens, Status status, int ncols,
             std::vector<int> rows, std::vector<Word> rep_words, std::int64_t cosets_defined);

  Status status() const { return status_; }
  bool complete() const { return status_ == Status::Complete; }
  int index() const;
  const Presentation& presentation() const { return presentation_; }
  const std::vector<Word>& subgroup_generators() const { return subgens_; }
  /// Total cosets defined during the run, merged ones included.
  std::int64_t cosets_defined() const { return cosets_defined_; }

  /// Action value, cosets and columns 1-based / 0-based respectively.
  int entry(int coset, int col) const;
  int column_of(const Letter& l) const;
  int trace(int coset, const Word& w) const;

  /// Word tracing coset 1 to the given coset (from the definition tree).
  const Word& rep_word(int coset) const;

  /// Re-traces every subgroup generator and every relator cycle; true iff the
  /// table really is a closed consistent action.
  bool verify() const;

 private:
  Presentation presentation_;
  std::vector<Word> subgens_;
  Status status_;
  int ncols_;
  std::vector<int> rows_;  // (index+1) * ncols, row 0 unused
  std::vector<Word> rep_words_;
  std::int64_t cosets_defined_;
};

/// HLT-style enumeration: subgroup generators scanned at coset 1, then every
/// live coset is scanned against every relator in declaration order with
/// gaps filled in scan order; remaining empty entries of the row are then
/// defined. Coincidences are processed immediately with a union-find queue.
/// Deterministic: identical inputs give the identical table.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens,
                        std::int64_t max_cosets = 1'000'000);

struct GroupProfile {
  int order = 0;
  std::map<int, int> order_histogram;
  int center_size = 0;
  bool unique_involution = false;

  friend bool operator==(const GroupProfile&, const GroupProfile&) = default;
};

/// Group multiplication table extracted from a trivial-subgroup enumeration:
/// cosets are exactly the group elements, multiplication is c * rep_word(d).
class CayleyTable {
 public:
  CayleyTable(const CosetTable& table);  // requires complete, subgens empty

  int order() const { return order_; }
  int multiply(int a, int b) const;
  int inverse(int a) const;
  int element_order(int a) const;
  const Word& rep_word(int a) const { return rep_words_[static_cast<std::size_t>(a)]; }

  GroupProfile profile() const;
  /// Profile of a subset (must be closed under multiplication; throws if not).
  GroupProfile profile_of(const std::vector<int>& elements) const;
  /// Elements whose representative word is a pure braid.
  std::vector<int> pure_elements() const;

 private:
  int order_;
  std::vector<int> mult_;  // (order+1)^2, 1-based
  std::vector<Word> rep_words_;
};

CayleyTable cayley_from(const CosetTable& table);

/// Order of the image of w in the group of a complete trivial-subgroup table.
int element_order_in(const CosetTable& table, const Word& w);

enum class GroupNameKind { Z1, Z2, Z4, Q8, Q16, Sym, Other };
struct GroupName {
  GroupNameKind kind = GroupNameKind::Other;
  int sym_degree = 0;
  std::string str() const;
  friend bool operator==(const GroupName&, const GroupName&) = default;
};

/// Identification by profile alone (order, histogram, involution count);
/// separates Z1, Z2, Z4, Q8, Q16, S3, S4 and reports Other for the rest.
GroupName identify_group(const GroupProfile& profile);

/// Generating set used for the pure-subgroup index checks: all rho_j together
/// with the band generators B_{i,m} for every 2 <= m <= n.
std::vector<Word> pure_subgroup_generators(int n);

}  // namespace rp2braid
