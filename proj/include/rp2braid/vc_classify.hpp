#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rp2braid/p3_model.hpp"

namespace rp2braid {

enum class FiniteGroup { Trivial, Z2, Z4, Q8 };
std::string finite_group_name(FiniteGroup g);

/// The isomorphism classes of finite subgroups of P_n(RP^2):
/// {1, Z2} for n = 1; {1, Z2, Z4, Q8} for n in {2, 3}; {1, Z2, Z4} for n >= 4.
struct FiniteSubgroupMenu {
  int n;
  std::vector<FiniteGroup> groups;
};
FiniteSubgroupMenu finite_subgroup_menu(int n);

/// Named facts consumed by the exclusion rules. Each carries its statement
/// and the computational evidence backing it.
enum class FactId {
  AmbientFinite,       // P_1, P_2 are finite (orders 2 and 8)
  UniqueInvolution,    // the full twist is the only element of order 2
  NoZ4xZ,              // no subgroup Z4 x Z (fixed-point balls empty)
  AutZ2Trivial,        // Aut(Z2) = 1: Z2 x| Z is always direct
  AutZ4Finite,         // Aut(Z4) = Z2: any Z4 x| Z contains Z4 x Z
  AutQ8Finite,         // Aut(Q8) = S4: any Q8 x| Z contains Q8 x Z
  Z4InQ8,              // Z4 < Q8, so Q8 x Z contains Z4 x Z
  AmalgamIndexTwoZ,    // G1 *_F G2 contains F x| Z of index 2
  ZRealized,           // infinite-order element exists
  Z2xZRealized,        // full twist times an infinite-order commuting element
  AmalgamRealized,     // Z4 *_Z2 Z4 realized via the amalgam witness
};

std::string fact_id_name(FactId id);  // "no-Z4xZ", "unique-involution", ...

struct Fact {
  FactId id;
  std::string statement;
  std::string evidence;
};

struct FactSet {
  std::vector<Fact> facts;
  bool has(FactId id) const;
  const Fact& get(FactId id) const;  // throws std::out_of_range if missing
};

/// Runs the cheap computational evidence (n = 2 regular table profile, P3
/// fixed-letter scan, small kernel fixed-point balls, amalgam witness) and
/// packages the fact set for the given n.
FactSet gather_facts(int n);

/// Type I candidate F x| Z, enumerated up to the order of the acting
/// automorphism (Aut(Z2) trivial, Aut(Z4) = Z2, Aut(Q8) = S4 with element
/// orders 1..4).
struct TypeISpec {
  FiniteGroup f;
  int action_order;
};

/// Type II candidate G1 *_F G2 with [G_i : F] = 2.
struct TypeIISpec {
  FiniteGroup g1;
  FiniteGroup f;
  FiniteGroup g2;
};

enum class CandidateStatus { Pending, Realized, Excluded, NotApplicable };

struct VCCandidate {
  std::variant<TypeISpec, TypeIISpec> shape;
  std::string group_name;
  CandidateStatus status = CandidateStatus::Pending;
  std::vector<FactId> fact_chain;
  std::string witness;

  bool is_type1() const { return std::holds_alternative<TypeISpec>(shape); }
};

/// All Wall candidates over the menu: Type I pairs (F, action class) and
/// Type II triples with index-2 containments inside the menu.
std::vector<VCCandidate> wall_candidates(const FiniteSubgroupMenu& menu);

struct ClassificationReport {
  int n;
  std::vector<VCCandidate> candidates;
  std::vector<std::string> realized;  // sorted group names
};

/// Marks every candidate realized or excluded, each with a fact chain drawn
/// from the given set; throws std::out_of_range if a required fact is absent.
ClassificationReport apply_exclusions(int n, std::vector<VCCandidate> candidates,
                                      const FactSet& facts);

ClassificationReport classify(int n);  // wall_candidates + gather_facts + apply_exclusions

/// Re-checks one candidate's fact chain against the fact set: all facts
/// present and the chain is exactly the one the rules assign.
bool replay_fact_chain(const VCCandidate& c, const FactSet& facts);

// --- Z4 *_Z2 Z4 normal forms ------------------------------------------------

/// delta in {0,1} tracks the central z = u^2 = v^2; the syllable string over
/// {u, v} is strictly alternating. Multiplication rewrites uu -> z, vv -> z.
class AmalgamElement {
 public:
  enum class Syl : std::uint8_t { U = 0, V = 1 };

  AmalgamElement() = default;
  static AmalgamElement u();
  static AmalgamElement v();
  static AmalgamElement z();

  int delta() const { return delta_; }
  const std::vector<Syl>& syllables() const { return syl_; }
  int syllable_count() const { return static_cast<int>(syl_.size()); }
  bool is_identity() const { return delta_ == 0 && syl_.empty(); }

  AmalgamElement operator*(const AmalgamElement& o) const;
  AmalgamElement inverse() const;
  AmalgamElement pow(int k) const;

  std::string str() const;  // "z u v u" or "e"

  friend auto operator<=>(const AmalgamElement&, const AmalgamElement&) = default;

 private:
  int delta_ = 0;
  std::vector<Syl> syl_;
};

/// Normal form of a word in u, v with integer exponents.
AmalgamElement amalgam_normal_form(const std::vector<std::pair<char, int>>& word);

/// All normal forms with at most the given syllable count (2 per count: one
/// starting with u, one with v; times the central bit).
std::vector<AmalgamElement> amalgam_ball(int max_syllables);

/// Image of a normal form under u -> uu_img, v -> vv_img in the P3 model.
P3Element amalgam_to_p3(const AmalgamElement& a, const P3Element& u_img, const P3Element& v_img);

// --- Type II injectivity ----------------------------------------------------

enum class Type2Result { Injective, NotWellDefined, FactorNotInjective, ImageFinite, Inconclusive };
std::string type2_result_name(Type2Result r);

struct Type2Check {
  Type2Result result;
  std::string detail;
  std::optional<P3Element> infinite_order_witness;
};

/// Checks the hypotheses of the Type II criterion for the map
/// Z4 *_Z2 Z4 -> P3 sending the factor generators to u, v: well-definedness
/// (u^4 = v^4 = e, u^2 = v^2), factor injectivity (orders exactly 4), then
/// searches <u, v> for an element of infinite order (breadth-first closure
/// with the given element budget). A finite closure proves the image finite
/// and the map not injective.
Type2Check type2_injectivity_check(const P3Element& u, const P3Element& v,
                                   int max_closure = 512);

}  // namespace rp2braid
