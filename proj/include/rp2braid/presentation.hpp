#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rp2braid/word.hpp"

namespace rp2braid {

/// A finite presentation over the braid generators of some strand count.
/// Relators are freely reduced words equal to the identity in the group.
struct Presentation {
  int strands;
  std::vector<Generator> generators;  // sigma_1..sigma_{n-1}, rho_1..rho_n
  std::vector<Word> relators;

  Presentation(int strands, std::vector<Word> relators);
};

/// The Van Buskirk presentation of B_n(RP^2).
///
/// Relator families (i, j range over valid generator indices):
///   R1  sigma_i sigma_j sigma_i^-1 sigma_j^-1            |i-j| >= 2
///   R2  sigma_i sigma_{i+1} sigma_i sigma_{i+1}^-1 sigma_i^-1 sigma_{i+1}^-1
///   R3  sigma_i rho_j sigma_i^-1 rho_j^-1                j not in {i, i+1}
///   R4  rho_{i+1} sigma_i rho_i^-1 sigma_i               (rho_{i+1} = sigma_i^-1 rho_i sigma_i^-1)
///   R5  rho_n^2 sigma_{n-1}..sigma_2 sigma_1^2 sigma_2..sigma_{n-1}
///   R6  rho_{i+1}^-1 rho_i^-1 rho_{i+1} rho_i sigma_i^-2
Presentation van_buskirk_presentation(int n);

/// One edit in a rewriting trace: insert (or delete) relator `relator`,
/// possibly inverted, at letter offset `position` of the current word. The
/// current word is kept freely reduced after every edit.
struct TraceStep {
  std::size_t position;
  int relator;
  bool use_inverse;
  bool deletion;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ProofTrace {
  Word start;
  std::vector<TraceStep> steps;
  Word end;
};

/// Replays the trace; true iff every step is a legal edit and the replay of
/// `start` arrives at `end` (both compared freely reduced). Malformed
/// positions or non-matching deletions make the trace invalid, not an error.
bool check_trace(const Presentation& p, const ProofTrace& t);

struct SearchBudget {
  int max_edits = 12;
  std::uint64_t max_states = 2'000'000;  // total across corridors
  int max_slack = 8;                     // widest allowed length corridor
};

struct SearchStats {
  std::uint64_t states_visited = 0;
  int corridors_tried = 0;
  bool budget_exhausted = false;
};

struct ProveResult {
  std::optional<ProofTrace> trace;
  SearchStats stats;
};

/// Breadth-first search for a trace from u v^-1 to the empty word, layered by
/// edit count with relators tried in declaration order and positions left to
/// right. Intermediate words are confined to a length corridor that widens
/// (0, 1, ..., max_slack above the start length) until the state budget is
/// spent; within a corridor the returned trace has minimal edit count and is
/// the lexicographically least such. NotFound is inconclusive, never a
/// disproof.
ProveResult prove_equal(const Presentation& p, const Word& u, const Word& v,
                        const SearchBudget& budget = {});

/// Text format: line "strands: <n>" then lines "rel: <word>".
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation_text(const std::string& text);
std::string format_presentation(const Presentation& p);

}  // namespace rp2braid
