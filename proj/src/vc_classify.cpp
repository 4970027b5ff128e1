#include "rp2braid/vc_classify.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rp2braid/coset_enum.hpp"
#include "rp2braid/kernel_action.hpp"

namespace rp2braid {

std::string finite_group_name(FiniteGroup g) {
  switch (g) {
    case FiniteGroup::Trivial: return "1";
    case FiniteGroup::Z2: return "Z2";
    case FiniteGroup::Z4: return "Z4";
    case FiniteGroup::Q8: return "Q8";
  }
  return "?";
}

FiniteSubgroupMenu finite_subgroup_menu(int n) {
  if (n < 1) throw std::invalid_argument("menu needs n >= 1");
  if (n == 1) return {n, {FiniteGroup::Trivial, FiniteGroup::Z2}};
  if (n <= 3) return {n, {FiniteGroup::Trivial, FiniteGroup::Z2, FiniteGroup::Z4, FiniteGroup::Q8}};
  return {n, {FiniteGroup::Trivial, FiniteGroup::Z2, FiniteGroup::Z4}};
}

std::string fact_id_name(FactId id) {
  switch (id) {
    case FactId::AmbientFinite: return "ambient-finite";
    case FactId::UniqueInvolution: return "unique-involution";
    case FactId::NoZ4xZ: return "no-Z4xZ";
    case FactId::AutZ2Trivial: return "aut-Z2-trivial";
    case FactId::AutZ4Finite: return "aut-Z4-finite";
    case FactId::AutQ8Finite: return "aut-Q8-finite";
    case FactId::Z4InQ8: return "Z4-in-Q8";
    case FactId::AmalgamIndexTwoZ: return "amalgam-index-two-Z";
    case FactId::ZRealized: return "Z-realized";
    case FactId::Z2xZRealized: return "Z2xZ-realized";
    case FactId::AmalgamRealized: return "amalgam-realized";
  }
  return "?";
}

bool FactSet::has(FactId id) const {
  for (const Fact& f : facts)
    if (f.id == id) return true;
  return false;
}

const Fact& FactSet::get(FactId id) const {
  for (const Fact& f : facts)
    if (f.id == id) return f;
  throw std::out_of_range("fact not present in the fact set");
}

namespace {

int order_2_count_in_small_p3_ball(int radius) {
  int count = 0;
  std::vector<Q8> qs;
  for (int axis = 0; axis <= 3; ++axis) {
    Q8 base = axis == 0 ? Q8::one() : Q8::tau(axis);
    qs.push_back(base);
    qs.push_back(-base);
  }
  // count elements of order 2 with small kernel part
  std::vector<F2Word> words;
  words.push_back(F2Word{});
  std::vector<F2Word> frontier = words;
  for (int l = 0; l < radius; ++l) {
    std::vector<F2Word> next;
    for (const F2Word& w : frontier)
      for (const F2Word& g :
           {F2Word::x(), F2Word::x().inverse(), F2Word::y(), F2Word::y().inverse()}) {
        F2Word e = w * g;
        if (e.length() == w.length() + 1) next.push_back(e);
      }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  for (const F2Word& w : words)
    for (Q8 q : qs)
      if (p3_order({w, q}) == std::optional<int>(2)) ++count;
  return count;
}

}  // namespace

FactSet gather_facts(int n) {
  FactSet fs;

  if (n <= 2) {
    auto t1 = todd_coxeter(van_buskirk_presentation(1), {}, 1000);
    auto t2 = todd_coxeter(van_buskirk_presentation(2), {}, 10000);
    auto cay = cayley_from(t2);
    auto pure = cay.profile_of(cay.pure_elements());
    std::ostringstream ev;
    ev << "coset enumeration: |P_1| = " << t1.index() << ", |P_2| = " << pure.order
       << " (pure part of the order-" << cay.order() << " two-strand group)";
    fs.facts.push_back({FactId::AmbientFinite, "P_1 and P_2 are finite", ev.str()});
  }

  {
    auto t2 = todd_coxeter(van_buskirk_presentation(2), {}, 10000);
    auto prof = cayley_from(t2).profile();
    int p3_involutions = order_2_count_in_small_p3_ball(2);
    if (!prof.unique_involution || p3_involutions != 1)
      throw std::logic_error("unique-involution evidence failed");
    std::ostringstream ev;
    ev << "n=2 regular table has " << prof.order_histogram[2]
       << " involution(s); P3 model ball |w| <= 2 has " << p3_involutions
       << " element(s) of order 2";
    fs.facts.push_back(
        {FactId::UniqueInvolution, "the full twist is the unique element of order 2", ev.str()});
  }

  {
    bool empty_ok = true;
    for (int axis = 1; axis <= 3; ++axis)
      for (Q8 q : {Q8::tau(axis), -Q8::tau(axis)})
        empty_ok = empty_ok && fixed_words_ball(q, 6).size() == 1;
    for (int rank : {2, 3})
      for (const FreeAut& a : {conj_alpha_inv(rank), conj_beta_inv(rank)})
        empty_ok = empty_ok && fixed_points_ball(a, 4).size() == 1;
    if (!empty_ok) throw std::logic_error("fixed-point evidence for NoZ4xZ failed");
    fs.facts.push_back({FactId::NoZ4xZ, "P_n has no subgroup Z4 x Z",
                        "fixed-point balls are trivial: P3 action radius 6 (all noncentral q), "
                        "kernel conjugation actions ranks 2-3 radius 4"});
  }

  fs.facts.push_back({FactId::AutZ2Trivial, "Aut(Z2) is trivial, so Z2 x| Z = Z2 x Z",
                      "the only automorphism of a 2-element group is the identity"});
  fs.facts.push_back({FactId::AutZ4Finite,
                      "Aut(Z4) = Z2, so any Z4 x| Z contains Z4 x Z with index <= 2",
                      "the action of 2Z is trivial for either generator image"});
  fs.facts.push_back({FactId::AutQ8Finite,
                      "Aut(Q8) = S4, so any Q8 x| Z contains Q8 x Z with index <= 4",
                      "automorphism orders divide 4 on the Z-generator image"});
  fs.facts.push_back({FactId::Z4InQ8, "Q8 contains Z4, so Q8 x Z contains Z4 x Z",
                      "tau_1 generates a Z4 inside Q8"});
  fs.facts.push_back({FactId::AmalgamIndexTwoZ,
                      "G1 *_F G2 contains F x| Z of index 2",
                      "preimage of the infinite cyclic subgroup of Z2 * Z2"});

  {
    P3Element x_elem{F2Word::x(), Q8::one()};
    bool x_inf = !p3_order(x_elem).has_value();
    if (!x_inf) throw std::logic_error("kernel generator should have infinite order");
    fs.facts.push_back(
        {FactId::ZRealized, "Z is realized", "p3 order of ( x , 1 ) is infinite"});

    P3Element centre{F2Word{}, Q8::minus_one()};
    bool commutes = p3_multiply(centre, x_elem) == p3_multiply(x_elem, centre);
    bool order2 = p3_order(centre) == std::optional<int>(2);
    if (!commutes || !order2) throw std::logic_error("Z2 x Z witness failed");
    fs.facts.push_back({FactId::Z2xZRealized, "Z2 x Z is realized",
                        "( e , -1 ) has order 2 and commutes with the infinite-order ( x , 1 )"});
  }

  {
    AmalgamWitness wit = amalgam_witness();
    Type2Check chk = type2_injectivity_check(wit.u, wit.v);
    if (!wit.valid() || chk.result != Type2Result::Injective)
      throw std::logic_error("amalgam witness failed");
    fs.facts.push_back({FactId::AmalgamRealized, "Z4 *_Z2 Z4 is realized",
                        "u = ( e , t3 ), v = ( x , t3 ): orders 4, u^2 = v^2, u v^-1 = " +
                            format_p3(wit.uv_inverse) + " of infinite order"});
  }

  return fs;
}

namespace {

std::string type1_name(const TypeISpec& s) {
  if (s.f == FiniteGroup::Trivial) return "Z";
  std::string base = finite_group_name(s.f);
  if (s.action_order == 1) return base + "xZ";
  return base + "x|Z[" + std::to_string(s.action_order) + "]";
}

std::string type2_name(const TypeIISpec& s) {
  if (s.f == FiniteGroup::Trivial)
    return finite_group_name(s.g1) + "*" + finite_group_name(s.g2);
  return finite_group_name(s.g1) + "*" + finite_group_name(s.f) + "*" + finite_group_name(s.g2);
}

std::vector<int> automorphism_orders(FiniteGroup f) {
  switch (f) {
    case FiniteGroup::Trivial: return {1};
    case FiniteGroup::Z2: return {1};          // Aut(Z2) = 1
    case FiniteGroup::Z4: return {1, 2};       // Aut(Z4) = Z2
    case FiniteGroup::Q8: return {1, 2, 3, 4}; // Aut(Q8) = S4, element orders
  }
  return {1};
}

// index-2 containments available inside the menu
bool index_two(FiniteGroup f, FiniteGroup g) {
  return (f == FiniteGroup::Trivial && g == FiniteGroup::Z2) ||
         (f == FiniteGroup::Z2 && g == FiniteGroup::Z4) ||
         (f == FiniteGroup::Z4 && g == FiniteGroup::Q8);
}

// The exclusion/realization rule table; returns the status and fact chain a
// candidate must carry. Shared by apply_exclusions and replay_fact_chain.
std::pair<CandidateStatus, std::vector<FactId>> rule_for(const VCCandidate& c, int n) {
  if (n <= 2) return {CandidateStatus::NotApplicable, {FactId::AmbientFinite}};
  if (c.is_type1()) {
    const auto& s = std::get<TypeISpec>(c.shape);
    switch (s.f) {
      case FiniteGroup::Trivial:
        return {CandidateStatus::Realized, {FactId::ZRealized}};
      case FiniteGroup::Z2:
        return {CandidateStatus::Realized, {FactId::AutZ2Trivial, FactId::Z2xZRealized}};
      case FiniteGroup::Z4:
        if (s.action_order == 1) return {CandidateStatus::Excluded, {FactId::NoZ4xZ}};
        return {CandidateStatus::Excluded, {FactId::AutZ4Finite, FactId::NoZ4xZ}};
      case FiniteGroup::Q8:
        if (s.action_order == 1)
          return {CandidateStatus::Excluded, {FactId::Z4InQ8, FactId::NoZ4xZ}};
        return {CandidateStatus::Excluded,
                {FactId::AutQ8Finite, FactId::Z4InQ8, FactId::NoZ4xZ}};
    }
  } else {
    const auto& s = std::get<TypeIISpec>(c.shape);
    if (s.f == FiniteGroup::Trivial)
      return {CandidateStatus::Excluded, {FactId::UniqueInvolution}};
    if (s.f == FiniteGroup::Z2)
      return {CandidateStatus::Realized, {FactId::AmalgamRealized}};
    // Q8 *_Z4 Q8 contains Z4 x| Z, excluded like the Type I case
    return {CandidateStatus::Excluded,
            {FactId::AmalgamIndexTwoZ, FactId::AutZ4Finite, FactId::NoZ4xZ}};
  }
  return {CandidateStatus::Pending, {}};
}

std::string witness_for(const VCCandidate& c, const FactSet& facts) {
  if (c.is_type1()) {
    const auto& s = std::get<TypeISpec>(c.shape);
    if (s.f == FiniteGroup::Trivial) return facts.get(FactId::ZRealized).evidence;
    if (s.f == FiniteGroup::Z2) return facts.get(FactId::Z2xZRealized).evidence;
  } else if (std::get<TypeIISpec>(c.shape).f == FiniteGroup::Z2) {
    return facts.get(FactId::AmalgamRealized).evidence;
  }
  return {};
}

}  // namespace

std::vector<VCCandidate> wall_candidates(const FiniteSubgroupMenu& menu) {
  std::vector<VCCandidate> out;
  for (FiniteGroup f : menu.groups)
    for (int k : automorphism_orders(f)) {
      VCCandidate c;
      c.shape = TypeISpec{f, k};
      c.group_name = type1_name(TypeISpec{f, k});
      out.push_back(std::move(c));
    }
  for (FiniteGroup f : menu.groups)
    for (FiniteGroup g1 : menu.groups)
      for (FiniteGroup g2 : menu.groups) {
        if (!index_two(f, g1) || !index_two(f, g2)) continue;
        VCCandidate c;
        c.shape = TypeIISpec{g1, f, g2};
        c.group_name = type2_name(TypeIISpec{g1, f, g2});
        out.push_back(std::move(c));
      }
  return out;
}

ClassificationReport apply_exclusions(int n, std::vector<VCCandidate> candidates,
                                      const FactSet& facts) {
  ClassificationReport rep;
  rep.n = n;
  std::set<std::string> realized;
  for (VCCandidate& c : candidates) {
    auto [status, chain] = rule_for(c, n);
    for (FactId id : chain) (void)facts.get(id);  // throws when a fact is missing
    c.status = status;
    c.fact_chain = chain;
    if (status == CandidateStatus::Realized) {
      c.witness = witness_for(c, facts);
      realized.insert(c.group_name);
    }
  }
  rep.candidates = std::move(candidates);
  rep.realized.assign(realized.begin(), realized.end());
  return rep;
}

ClassificationReport classify(int n) {
  return apply_exclusions(n, wall_candidates(finite_subgroup_menu(n)), gather_facts(n));
}

bool replay_fact_chain(const VCCandidate& c, const FactSet& facts) {
  // The rule table depends on n only through the ambient-finite case, which
  // is recognizable from the recorded status itself.
  if (c.status == CandidateStatus::NotApplicable)
    return c.fact_chain == std::vector<FactId>{FactId::AmbientFinite} &&
           facts.has(FactId::AmbientFinite);
  auto [status, chain] = rule_for(c, 3);
  if (c.status != status || c.fact_chain != chain) return false;
  for (FactId id : chain)
    if (!facts.has(id)) return false;
  return true;
}

// --- amalgam normal forms ----------------------------------------------------

AmalgamElement AmalgamElement::u() {
  AmalgamElement a;
  a.syl_.push_back(Syl::U);
  return a;
}

AmalgamElement AmalgamElement::v() {
  AmalgamElement a;
  a.syl_.push_back(Syl::V);
  return a;
}

AmalgamElement AmalgamElement::z() {
  AmalgamElement a;
  a.delta_ = 1;
  return a;
}

AmalgamElement AmalgamElement::operator*(const AmalgamElement& o) const {
  AmalgamElement out;
  out.delta_ = delta_ ^ o.delta_;
  out.syl_ = syl_;
  for (Syl s : o.syl_) {
    if (!out.syl_.empty() && out.syl_.back() == s) {
      out.syl_.pop_back();  // uu = vv = z
      out.delta_ ^= 1;
    } else {
      out.syl_.push_back(s);
    }
  }
  return out;
}

AmalgamElement AmalgamElement::inverse() const {
  AmalgamElement out;
  out.delta_ = (delta_ + static_cast<int>(syl_.size())) % 2;  // s^-1 = s z
  out.syl_.assign(syl_.rbegin(), syl_.rend());
  return out;
}

AmalgamElement AmalgamElement::pow(int k) const {
  AmalgamElement base = k >= 0 ? *this : inverse();
  int e = k >= 0 ? k : -k;
  AmalgamElement acc;
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

std::string AmalgamElement::str() const {
  if (is_identity()) return "e";
  std::string s;
  if (delta_) s = "z";
  for (Syl x : syl_) {
    if (!s.empty()) s += ' ';
    s += x == Syl::U ? 'u' : 'v';
  }
  return s;
}

AmalgamElement amalgam_normal_form(const std::vector<std::pair<char, int>>& word) {
  AmalgamElement acc;
  for (const auto& [g, e] : word) {
    AmalgamElement gen;
    if (g == 'u')
      gen = AmalgamElement::u();
    else if (g == 'v')
      gen = AmalgamElement::v();
    else
      throw std::invalid_argument("amalgam words use generators 'u' and 'v'");
    acc = acc * gen.pow(e);
  }
  return acc;
}

std::vector<AmalgamElement> amalgam_ball(int max_syllables) {
  std::vector<AmalgamElement> out;
  for (int delta : {0, 1})
    for (int t = 0; t <= max_syllables; ++t) {
      std::vector<std::vector<AmalgamElement::Syl>> strings;
      if (t == 0) {
        strings.push_back({});
      } else {
        for (AmalgamElement::Syl start : {AmalgamElement::Syl::U, AmalgamElement::Syl::V}) {
          std::vector<AmalgamElement::Syl> s;
          AmalgamElement::Syl cur = start;
          for (int i = 0; i < t; ++i) {
            s.push_back(cur);
            cur = cur == AmalgamElement::Syl::U ? AmalgamElement::Syl::V : AmalgamElement::Syl::U;
          }
          strings.push_back(std::move(s));
        }
      }
      for (auto& s : strings) {
        AmalgamElement e = delta ? AmalgamElement::z() : AmalgamElement();
        for (AmalgamElement::Syl x : s)
          e = e * (x == AmalgamElement::Syl::U ? AmalgamElement::u() : AmalgamElement::v());
        out.push_back(e);
      }
    }
  return out;
}

P3Element amalgam_to_p3(const AmalgamElement& a, const P3Element& u_img, const P3Element& v_img) {
  P3Element acc = p3_identity();
  if (a.delta()) acc = p3_multiply(u_img, u_img);  // z = u^2
  for (AmalgamElement::Syl s : a.syllables())
    acc = p3_multiply(acc, s == AmalgamElement::Syl::U ? u_img : v_img);
  return acc;
}

// --- Type II injectivity -----------------------------------------------------

std::string type2_result_name(Type2Result r) {
  switch (r) {
    case Type2Result::Injective: return "injective";
    case Type2Result::NotWellDefined: return "not-well-defined";
    case Type2Result::FactorNotInjective: return "factor-not-injective";
    case Type2Result::ImageFinite: return "image-finite";
    case Type2Result::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Type2Check type2_injectivity_check(const P3Element& u, const P3Element& v, int max_closure) {
  if (p3_power(u, 4) != p3_identity() || p3_power(v, 4) != p3_identity() ||
      p3_power(u, 2) != p3_power(v, 2))
    return {Type2Result::NotWellDefined, "u^4 = v^4 = e or u^2 = v^2 fails", std::nullopt};
  if (p3_order(u) != std::optional<int>(4) || p3_order(v) != std::optional<int>(4))
    return {Type2Result::FactorNotInjective, "a factor generator has order below 4", std::nullopt};

  // Breadth-first closure of <u, v>; an infinite-order element certifies
  // injectivity by the Type II criterion, a finite closure refutes it.
  std::set<P3Element> seen{p3_identity()};
  std::deque<P3Element> queue{p3_identity()};
  const P3Element gens[4] = {u, p3_invert(u), v, p3_invert(v)};
  while (!queue.empty()) {
    P3Element g = queue.front();
    queue.pop_front();
    for (const P3Element& h : gens) {
      P3Element e = p3_multiply(g, h);
      if (seen.count(e)) continue;
      if (!p3_order(e).has_value())
        return {Type2Result::Injective, "infinite-order image element " + format_p3(e),
                e};
      if (static_cast<int>(seen.size()) >= max_closure)
        return {Type2Result::Inconclusive, "closure budget exhausted", std::nullopt};
      seen.insert(e);
      queue.push_back(e);
    }
  }
  return {Type2Result::ImageFinite,
          "image closes at " + std::to_string(seen.size()) + " elements", std::nullopt};
}

}  // namespace rp2braid
