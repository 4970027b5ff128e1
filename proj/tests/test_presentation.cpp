#include "rp2braid/presentation.hpp"

#include <sstream>

#include "doctest.h"
#include "rp2braid/coset_enum.hpp"
#include "test_util.hpp"

using namespace rp2braid;

TEST_CASE("van Buskirk generators and relator shapes") {
  Presentation p1 = van_buskirk_presentation(1);
  CHECK(p1.generators.size() == 1);
  REQUIRE(p1.relators.size() == 1);
  CHECK(p1.relators[0] == parse_word(1, "r1^2"));

  Presentation p2 = van_buskirk_presentation(2);
  // R4, R5, R6 only: no commuting or braid relators at n = 2
  REQUIRE(p2.relators.size() == 3);
  CHECK(p2.relators[0] == parse_word(2, "r2 s1 r1^-1 s1"));
  CHECK(p2.relators[1] == parse_word(2, "r2^2 s1^2"));
  CHECK(p2.relators[2] == parse_word(2, "r2^-1 r1^-1 r2 r1 s1^-2"));

  // counts by index ranges: R1 pairs + R2 + R3 + R4 + R5 + R6
  for (int n : {3, 4, 5, 6}) {
    Presentation p = van_buskirk_presentation(n);
    std::size_t r1 = 0;
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) ++r1;
    std::size_t r3 = static_cast<std::size_t>((n - 1) * (n - 2));
    std::size_t want = r1 + static_cast<std::size_t>(n - 2) + r3 +
                       static_cast<std::size_t>(n - 1) + 1 + static_cast<std::size_t>(n - 1);
    CHECK(p.relators.size() == want);
  }
}

TEST_CASE("relators vanish under both invariant homomorphisms") {
  for (int n = 1; n <= 10; ++n) {
    Presentation p = van_buskirk_presentation(n);
    for (const Word& r : p.relators) {
      CHECK(permutation_of(r).is_identity());
      CHECK(abelianize(r) == AbelianImage{0, 0});
    }
  }
}

TEST_CASE("invariants survive relator insertion at random positions") {
  std::mt19937_64 rng(5150);
  Presentation p = van_buskirk_presentation(4);
  for (int t = 0; t < 400; ++t) {
    Word w = testutil::random_reduced_word(rng, 4, 14);
    std::uniform_int_distribution<std::size_t> rel_dist(0, p.relators.size() - 1);
    std::uniform_int_distribution<std::size_t> pos_dist(0, w.length());
    Word rel = p.relators[rel_dist(rng)];
    if (rng() & 1) rel = invert(rel);
    std::size_t pos = pos_dist(rng);
    std::vector<Letter> ls(w.letters().begin(), w.letters().begin() + static_cast<long>(pos));
    ls.insert(ls.end(), rel.letters().begin(), rel.letters().end());
    ls.insert(ls.end(), w.letters().begin() + static_cast<long>(pos), w.letters().end());
    Word w2(4, std::move(ls));
    CHECK(permutation_of(w2) == permutation_of(w));
    CHECK(abelianize(w2) == abelianize(w));
  }
}

TEST_CASE("check_trace accepts a one-edit R4 proof") {
  Presentation p = van_buskirk_presentation(2);
  // rho_2 = s1^-1 r1 s1^-1 via one R4 edit: start is rho_2 (s1^-1 r1 s1^-1)^-1
  Word u = parse_word(2, "r2");
  Word v = parse_word(2, "s1^-1 r1 s1^-1");
  Word start = multiply(u, invert(v));
  ProofTrace t{start, {TraceStep{0, 0, true, false}}, Word(2)};
  CHECK(check_trace(p, t));
}

TEST_CASE("check_trace rejects malformed steps") {
  Presentation p = van_buskirk_presentation(3);
  Word w = parse_word(3, "s1 s2");
  ProofTrace empty_trace{w, {}, w};
  CHECK(check_trace(p, empty_trace));

  // out-of-range position
  ProofTrace bad{w, {TraceStep{99, 0, false, false}}, w};
  CHECK(!check_trace(p, bad));
  // out-of-range relator index
  ProofTrace bad2{w, {TraceStep{0, 1000, false, false}}, w};
  CHECK(!check_trace(p, bad2));
  // deletion with no literal occurrence
  ProofTrace bad3{w, {TraceStep{0, 0, false, true}}, w};
  CHECK(!check_trace(p, bad3));
}

TEST_CASE("prove_equal finds the braid relation in one edit") {
  Presentation p = van_buskirk_presentation(3);
  Word u = parse_word(3, "s1 s2 s1");
  Word v = parse_word(3, "s2 s1 s2");
  ProveResult r = prove_equal(p, u, v);
  REQUIRE(r.trace.has_value());
  CHECK(r.trace->steps.size() == 1);
  CHECK(check_trace(p, *r.trace));
}

TEST_CASE("prove_equal on u = v gives the empty trace") {
  Presentation p = van_buskirk_presentation(3);
  Word u = parse_word(3, "s1 r2 s2");
  ProveResult r = prove_equal(p, u, u);
  REQUIRE(r.trace.has_value());
  CHECK(r.trace->steps.empty());
  CHECK(check_trace(p, *r.trace));
}

TEST_CASE("prove_equal certifies a^4 = full twist in B_2, checked against the Cayley table") {
  // independent oracle first: in the 16-element group, a has order 8 and a^4
  // lands on the same element as the full twist
  Presentation p = van_buskirk_presentation(2);
  auto table = todd_coxeter(p, {}, 10000);
  REQUIRE(table.complete());
  Word a = parse_word(2, "s1^-1 r1");
  CHECK(element_order_in(table, a) == 8);
  CHECK(table.trace(1, power(a, 4)) == table.trace(1, parse_word(2, "s1^2")));

  ProveResult r = prove_equal(p, power(a, 4), parse_word(2, "s1^2"));
  REQUIRE(r.trace.has_value());
  CHECK(check_trace(p, *r.trace));
  CHECK(r.trace->steps.size() == 7);  // found in the slack-2 corridor
}

TEST_CASE("prove_equal reports budget exhaustion as not-found") {
  Presentation p = van_buskirk_presentation(2);
  // r1 is not trivial in B_2 (it has order 4); the search must fail cleanly
  SearchBudget tight;
  tight.max_edits = 3;
  tight.max_states = 2000;
  tight.max_slack = 2;
  ProveResult r = prove_equal(p, parse_word(2, "r1"), Word(2), tight);
  CHECK(!r.trace.has_value());
  CHECK(r.stats.budget_exhausted);
}

TEST_CASE("prove_equal traces replay through check_trace on random relator consequences") {
  std::mt19937_64 rng(31337);
  Presentation p = van_buskirk_presentation(3);
  for (int t = 0; t < 20; ++t) {
    // build a known-trivial word from two conjugated relators
    std::uniform_int_distribution<std::size_t> rel_dist(0, p.relators.size() - 1);
    Word conj = testutil::random_reduced_word(rng, 3, 3);
    Word w = multiply(multiply(conj, p.relators[rel_dist(rng)]), invert(conj));
    Word conj2 = testutil::random_reduced_word(rng, 3, 2);
    Word w2 = multiply(multiply(conj2, invert(p.relators[rel_dist(rng)])), invert(conj2));
    Word prod = multiply(w, w2);
    SearchBudget b;
    b.max_states = 300000;
    ProveResult r = prove_equal(p, prod, Word(3), b);
    if (r.trace) CHECK(check_trace(p, *r.trace));
  }
}

TEST_CASE("presentation file format round trip") {
  Presentation p = van_buskirk_presentation(3);
  std::string text = format_presentation(p);
  Presentation q = parse_presentation_text(text);
  CHECK(q.strands == p.strands);
  CHECK(q.relators == p.relators);
  CHECK_THROWS_AS(parse_presentation_text("rel: s1"), std::invalid_argument);
}

TEST_CASE("presentation validation battery (build gate)") {
  // orders 2 and 16, pure index n!, Q8 profile: failure here means the
  // relator set must be revisited
  auto t1 = todd_coxeter(van_buskirk_presentation(1), {}, 100);
  REQUIRE(t1.complete());
  CHECK(t1.index() == 2);

  auto t2 = todd_coxeter(van_buskirk_presentation(2), {}, 10000);
  REQUIRE(t2.complete());
  CHECK(t2.index() == 16);

  for (int n = 2; n <= 4; ++n) {
    auto tn = todd_coxeter(van_buskirk_presentation(n), pure_subgroup_generators(n), 500000);
    REQUIRE(tn.complete());
    int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(tn.index() == fact);
  }

  auto cay = cayley_from(t2);
  auto prof = cay.profile_of(cay.pure_elements());
  CHECK(identify_group(prof) == GroupName{GroupNameKind::Q8, 0});
}
