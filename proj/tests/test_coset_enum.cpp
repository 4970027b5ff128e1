#include "rp2braid/coset_enum.hpp"

#include <set>
#include <stdexcept>

#include "doctest.h"
#include "rp2braid/artin.hpp"
#include "rp2braid/torsion.hpp"

using namespace rp2braid;

TEST_CASE("the one-strand group has order 2") {
  auto t = todd_coxeter(van_buskirk_presentation(1), {}, 100);
  REQUIRE(t.complete());
  CHECK(t.index() == 2);
  CHECK(t.verify());
  auto cay = cayley_from(t);
  CHECK(cay.profile().order == 2);
  CHECK(identify_group(cay.profile()) == GroupName{GroupNameKind::Z2, 0});
}

TEST_CASE("the two-strand group has order 16 with one involution") {
  auto t = todd_coxeter(van_buskirk_presentation(2), {}, 10000);
  REQUIRE(t.complete());
  CHECK(t.index() == 16);
  CHECK(t.verify());
  auto cay = cayley_from(t);
  GroupProfile prof = cay.profile();
  CHECK(prof.unique_involution);
  std::map<int, int> expected{{1, 1}, {2, 1}, {4, 10}, {8, 4}};
  CHECK(prof.order_histogram == expected);
  CHECK(identify_group(prof) == GroupName{GroupNameKind::Q16, 0});
  CHECK(prof.center_size == 2);
}

TEST_CASE("pure part of the two-strand table is the quaternion group") {
  auto t = todd_coxeter(van_buskirk_presentation(2), {}, 10000);
  auto cay = cayley_from(t);
  auto pure = cay.pure_elements();
  REQUIRE(pure.size() == 8);
  GroupProfile prof = cay.profile_of(pure);
  std::map<int, int> expected{{1, 1}, {2, 1}, {4, 6}};
  CHECK(prof.order_histogram == expected);
  CHECK(identify_group(prof) == GroupName{GroupNameKind::Q8, 0});
}

TEST_CASE("named element orders at n = 2") {
  auto t = todd_coxeter(van_buskirk_presentation(2), {}, 10000);
  CHECK(element_order_in(t, element_a(2)) == 8);
  CHECK(element_order_in(t, element_b(2)) == 4);
  CHECK(element_order_in(t, full_twist(2)) == 2);
  CHECK(element_order_in(t, Word(2)) == 1);
}

TEST_CASE("band generators and rho alone span the pure subgroup at n = 3") {
  std::vector<Word> subgens{b_generator(1, 3), b_generator(2, 3), rho_word(3, 1), rho_word(3, 2),
                            rho_word(3, 3)};
  auto t = todd_coxeter(van_buskirk_presentation(3), subgens, 100000);
  REQUIRE(t.complete());
  CHECK(t.index() == 6);
}

TEST_CASE("pure subgroup index is n factorial") {
  const int factorial[5] = {1, 1, 2, 6, 24};
  for (int n = 2; n <= 4; ++n) {
    auto t = todd_coxeter(van_buskirk_presentation(n), pure_subgroup_generators(n), 500000);
    REQUIRE(t.complete());
    CHECK(t.index() == factorial[n]);
    CHECK(t.verify());
  }
}

TEST_CASE("coset action matches the permutation homomorphism at n = 3") {
  // the pure-subgroup coset action of B_3 is the image of permutation_of
  auto t = todd_coxeter(van_buskirk_presentation(3), pure_subgroup_generators(3), 500000);
  REQUIRE(t.complete());
  REQUIRE(t.index() == 6);
  // two words with equal permutations act equally on cosets, sampled over
  // the generators and a few products
  std::vector<Word> words{parse_word(3, "s1"), parse_word(3, "s2"), parse_word(3, "s1 s2"),
                          parse_word(3, "s2 s1"), parse_word(3, "s1 s2 s1"),
                          parse_word(3, "r1"), parse_word(3, "r2 r1")};
  for (const Word& u : words)
    for (const Word& v : words) {
      bool same_perm = permutation_of(u) == permutation_of(v);
      bool same_action = true;
      for (int c = 1; c <= t.index(); ++c) same_action &= t.trace(c, u) == t.trace(c, v);
      CHECK(same_perm == same_action);
    }
}

TEST_CASE("Cayley inverses") {
  auto cay = cayley_from(todd_coxeter(van_buskirk_presentation(2), {}, 10000));
  for (int e = 1; e <= cay.order(); ++e) {
    CHECK(cay.multiply(e, cay.inverse(e)) == 1);
    CHECK(cay.multiply(cay.inverse(e), e) == 1);
  }
}

TEST_CASE("element orders at n = 2 are the divisors of 8 and 4") {
  auto t = todd_coxeter(van_buskirk_presentation(2), {}, 10000);
  auto cay = cayley_from(t);
  std::set<int> orders;
  for (int e = 1; e <= cay.order(); ++e) orders.insert(cay.element_order(e));
  CHECK(orders == std::set<int>{1, 2, 4, 8});
}

TEST_CASE("overflow is reported, not fabricated") {
  // B_3 over the trivial subgroup is infinite; a small budget must overflow
  auto t = todd_coxeter(van_buskirk_presentation(3), {}, 500);
  CHECK(!t.complete());
  CHECK(t.status() == CosetTable::Status::Overflow);
  CHECK_THROWS_AS(t.index(), std::logic_error);
}

TEST_CASE("identify_group distinguishes the named profiles") {
  GroupProfile z4{4, {{1, 1}, {2, 1}, {4, 2}}, 4, true};
  CHECK(identify_group(z4) == GroupName{GroupNameKind::Z4, 0});
  GroupProfile klein{4, {{1, 1}, {2, 3}}, 4, false};
  CHECK(identify_group(klein) == GroupName{GroupNameKind::Other, 0});
  GroupProfile s3{6, {{1, 1}, {2, 3}, {3, 2}}, 1, false};
  CHECK(identify_group(s3).str() == "S3");
  GroupProfile s4{24, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}, 1, false};
  CHECK(identify_group(s4).str() == "S4");
  GroupProfile z16{16, {{1, 1}, {2, 1}, {4, 2}, {8, 4}, {16, 8}}, 16, true};
  CHECK(identify_group(z16) == GroupName{GroupNameKind::Other, 0});
}

TEST_CASE("rep words trace from the subgroup coset") {
  auto t = todd_coxeter(van_buskirk_presentation(2), {}, 10000);
  for (int c = 1; c <= t.index(); ++c) CHECK(t.trace(1, t.rep_word(c)) == c);
}

TEST_CASE("enumeration is deterministic") {
  auto a = todd_coxeter(van_buskirk_presentation(3), pure_subgroup_generators(3), 100000);
  auto b = todd_coxeter(van_buskirk_presentation(3), pure_subgroup_generators(3), 100000);
  REQUIRE(a.complete());
  REQUIRE(b.complete());
  CHECK(a.index() == b.index());
  CHECK(a.cosets_defined() == b.cosets_defined());
  int ncols = 2 * static_cast<int>(a.presentation().generators.size());
  for (int c = 1; c <= a.index(); ++c) {
    CHECK(a.rep_word(c) == b.rep_word(c));
    for (int x = 0; x < ncols; ++x) CHECK(a.entry(c, x) == b.entry(c, x));
  }
}
