#include "rp2braid/vc_classify.hpp"

#include <random>
#include <stdexcept>
#include <set>

#include "doctest.h"

using namespace rp2braid;

namespace {

AmalgamElement random_amalgam(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len), gen_dist(0, 1), exp_dist(-3, 3);
  std::vector<std::pair<char, int>> word;
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i) word.push_back({gen_dist(rng) ? 'u' : 'v', exp_dist(rng)});
  return amalgam_normal_form(word);
}

}  // namespace

TEST_CASE("finite subgroup menus") {
  CHECK(finite_subgroup_menu(1).groups ==
        std::vector<FiniteGroup>{FiniteGroup::Trivial, FiniteGroup::Z2});
  CHECK(finite_subgroup_menu(3).groups ==
        std::vector<FiniteGroup>{FiniteGroup::Trivial, FiniteGroup::Z2, FiniteGroup::Z4,
                                 FiniteGroup::Q8});
  for (int n = 4; n <= 10; ++n)
    CHECK(finite_subgroup_menu(n).groups ==
          std::vector<FiniteGroup>{FiniteGroup::Trivial, FiniteGroup::Z2, FiniteGroup::Z4});
}

TEST_CASE("wall candidates at n >= 4") {
  auto cands = wall_candidates(finite_subgroup_menu(5));
  std::set<std::string> names;
  for (const auto& c : cands) names.insert(c.group_name);
  // Type I: Z, Z2xZ, Z4xZ (trivial), Z4x|Z[2] (inverting); Type II: Z2*Z2, Z4*Z2*Z4
  CHECK(names == std::set<std::string>{"Z", "Z2xZ", "Z4xZ", "Z4x|Z[2]", "Z2*Z2", "Z4*Z2*Z4"});
}

TEST_CASE("wall candidates at n = 3 add the quaternion shapes") {
  auto cands = wall_candidates(finite_subgroup_menu(3));
  std::set<std::string> names;
  for (const auto& c : cands) names.insert(c.group_name);
  CHECK(names.count("Q8xZ"));
  CHECK(names.count("Q8x|Z[2]"));
  CHECK(names.count("Q8x|Z[3]"));
  CHECK(names.count("Q8x|Z[4]"));
  CHECK(names.count("Q8*Z4*Q8"));
  CHECK(names.count("Z4*Z2*Z4"));
}

TEST_CASE("classification matches the virtually cyclic lists") {
  for (int n = 3; n <= 8; ++n) {
    ClassificationReport rep = classify(n);
    CHECK(rep.realized == std::vector<std::string>{"Z", "Z2xZ", "Z4*Z2*Z4"});
  }
  for (int n = 1; n <= 2; ++n) {
    ClassificationReport rep = classify(n);
    CHECK(rep.realized.empty());
    for (const auto& c : rep.candidates) CHECK(c.status == CandidateStatus::NotApplicable);
  }
}

TEST_CASE("every candidate status carries a replayable chain") {
  for (int n : {1, 2, 3, 4, 6}) {
    FactSet facts = gather_facts(n);
    ClassificationReport rep = classify(n);
    for (const auto& c : rep.candidates) {
      CHECK(!c.fact_chain.empty());
      CHECK(replay_fact_chain(c, facts));
    }
  }
}

TEST_CASE("exclusion chains reference the expected facts") {
  ClassificationReport rep = classify(4);
  for (const auto& c : rep.candidates) {
    if (c.group_name == "Z2*Z2") {
      CHECK(c.status == CandidateStatus::Excluded);
      CHECK(c.fact_chain == std::vector<FactId>{FactId::UniqueInvolution});
    }
    if (c.group_name == "Z4xZ") {
      CHECK(c.status == CandidateStatus::Excluded);
      CHECK(c.fact_chain == std::vector<FactId>{FactId::NoZ4xZ});
    }
    if (c.group_name == "Z4x|Z[2]") {
      CHECK(c.status == CandidateStatus::Excluded);
      CHECK(c.fact_chain == std::vector<FactId>{FactId::AutZ4Finite, FactId::NoZ4xZ});
    }
  }
  ClassificationReport rep3 = classify(3);
  for (const auto& c : rep3.candidates)
    if (c.group_name == "Q8*Z4*Q8") {
      CHECK(c.status == CandidateStatus::Excluded);
      CHECK(c.fact_chain == std::vector<FactId>{FactId::AmalgamIndexTwoZ, FactId::AutZ4Finite,
                                                FactId::NoZ4xZ});
    }
}

TEST_CASE("missing facts are an error") {
  auto cands = wall_candidates(finite_subgroup_menu(4));
  FactSet empty;
  CHECK_THROWS_AS(apply_exclusions(4, cands, empty), std::out_of_range);
}

TEST_CASE("amalgam normal forms") {
  AmalgamElement u = AmalgamElement::u(), v = AmalgamElement::v();
  CHECK((u * u).str() == "z");
  CHECK((u * u * u * u).is_identity());
  CHECK(u.pow(4).is_identity());
  CHECK(u.pow(2) == v.pow(2));
  CHECK(u.inverse() == u.pow(3));

  AmalgamElement uv1 = u * v.inverse();
  for (int k = 1; k <= 100; ++k) {
    AmalgamElement p = uv1.pow(k);
    CHECK(p.delta() == k % 2);
    CHECK(p.syllable_count() == 2 * k);
  }
}

TEST_CASE("amalgam multiplication is associative and normal forms are unique") {
  std::mt19937_64 rng(606);
  std::set<std::string> seen;
  for (int t = 0; t < 400; ++t) {
    AmalgamElement a = random_amalgam(rng, 6), b = random_amalgam(rng, 6),
                   c = random_amalgam(rng, 6);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    // alternation invariant
    const auto& s = a.syllables();
    for (std::size_t i = 0; i + 1 < s.size(); ++i) CHECK(s[i] != s[i + 1]);
  }
}

TEST_CASE("distinct powers of u v^-1 certify infinitude") {
  AmalgamElement uv1 = AmalgamElement::u() * AmalgamElement::v().inverse();
  std::set<std::string> forms;
  for (int k = 1; k <= 100; ++k) forms.insert(uv1.pow(k).str());
  CHECK(forms.size() == 100);
}

TEST_CASE("amalgam ball maps injectively into the model") {
  auto ball = amalgam_ball(10);
  CHECK(ball.size() == 42);
  AmalgamWitness wit = amalgam_witness();
  std::set<P3Element> images;
  for (const auto& a : ball) images.insert(amalgam_to_p3(a, wit.u, wit.v));
  CHECK(images.size() == 42);
}

TEST_CASE("type II injectivity checks") {
  AmalgamWitness wit = amalgam_witness();
  Type2Check ok = type2_injectivity_check(wit.u, wit.v);
  CHECK(ok.result == Type2Result::Injective);
  REQUIRE(ok.infinite_order_witness.has_value());
  CHECK(!p3_order(*ok.infinite_order_witness).has_value());

  // u = v: factors fine but the image is Z4
  Type2Check fin = type2_injectivity_check(wit.u, wit.u);
  CHECK(fin.result == Type2Result::ImageFinite);

  // u = (1, t1), v = (1, t2): image is the whole Q8, still finite
  Type2Check q8 = type2_injectivity_check({F2Word{}, Q8::tau(1)}, {F2Word{}, Q8::tau(2)});
  CHECK(q8.result == Type2Result::ImageFinite);

  // mismatched squares: not well defined
  Type2Check bad = type2_injectivity_check(wit.u, {F2Word::x(), Q8::tau(1)});
  CHECK(bad.result == Type2Result::NotWellDefined);

  // a generator of order 2 is not an injective Z4 factor
  Type2Check low = type2_injectivity_check({F2Word{}, Q8::minus_one()},
                                           {F2Word{}, Q8::minus_one()});
  CHECK(low.result == Type2Result::FactorNotInjective);
}

TEST_CASE("fact set contents") {
  FactSet f3 = gather_facts(3);
  CHECK(f3.has(FactId::UniqueInvolution));
  CHECK(f3.has(FactId::NoZ4xZ));
  CHECK(f3.has(FactId::AmalgamRealized));
  CHECK(!f3.has(FactId::AmbientFinite));
  FactSet f2 = gather_facts(2);
  CHECK(f2.has(FactId::AmbientFinite));
  CHECK_THROWS_AS(FactSet{}.get(FactId::NoZ4xZ), std::out_of_range);
}
