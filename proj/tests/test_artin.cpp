#include "rp2braid/artin.hpp"

#include <random>

#include <stdexcept>

#include "doctest.h"

using namespace rp2braid;

namespace {

Word random_sigma_word(std::mt19937_64& rng, int m, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len), gen_dist(1, m - 1), sign_dist(0, 1);
  std::vector<Letter> ls;
  int len = len_dist(rng);
  for (int i = 0; i < len; ++i) ls.push_back(sigma_letter(gen_dist(rng), sign_dist(rng) ? 1 : -1));
  return Word(m, std::move(ls));
}

}  // namespace

TEST_CASE("normal form basics") {
  CHECK(left_normal_form(parse_word(3, "s1 s1^-1"), 3) == GarsideNF{0, {}});
  CHECK(left_normal_form(parse_word(3, "s1 s2 s1"), 3) == GarsideNF{1, {}});
  GarsideNF single = left_normal_form(parse_word(3, "s1"), 3);
  CHECK(single.halftwist_power == 0);
  REQUIRE(single.factors.size() == 1);
  CHECK(single.factors[0] == PermutationBraid::generator(3, 1));
  // braid relation via normal forms
  CHECK(artin_equal(parse_word(3, "s1 s2 s1"), parse_word(3, "s2 s1 s2"), 3));
  CHECK(!artin_equal(parse_word(3, "s1 s2"), parse_word(3, "s2 s1"), 3));
  CHECK_THROWS_AS(left_normal_form(parse_word(3, "r1"), 3), std::invalid_argument);
}

TEST_CASE("negative letters and the half twist") {
  // sigma_1^-1 on two strands is exactly Delta^-1
  CHECK(left_normal_form(parse_word(2, "s1^-1"), 2) == GarsideNF{-1, {}});
  // Delta^2 is central: sigma_i Delta^2 = Delta^2 sigma_i
  Word d2 = parse_word(4, "s1 s2 s3 s1 s2 s3 s1 s2 s3 s1 s2 s3");
  for (int i = 1; i <= 3; ++i) {
    Word left = multiply(sigma_word(4, i), d2);
    Word right = multiply(d2, sigma_word(4, i));
    CHECK(artin_equal(left, right, 4));
  }
}

TEST_CASE("band generator words") {
  CHECK(b_generator(2, 3) == parse_word(3, "s2^2"));
  CHECK(b_generator(1, 3) == parse_word(3, "s2 s1^2 s2^-1"));
  CHECK(b_generator(3, 4) == parse_word(4, "s3^2"));
  CHECK(b_generator(2, 4) == parse_word(4, "s3 s2^2 s3^-1"));
  CHECK_THROWS_AS(b_generator(5, 4), std::invalid_argument);
}

TEST_CASE("band generator conjugation identities") {
  // sigma_2 B_{2,4} sigma_2^-1 = B_{3,4}
  Word lhs = multiply(multiply(sigma_word(4, 2), b_generator(2, 4)), sigma_word(4, 2, -1));
  CHECK(artin_equal(lhs, b_generator(3, 4), 4));
  // B_{1,3} B_{2,3} = s2 s1^2 s2
  CHECK(artin_equal(multiply(b_generator(1, 3), b_generator(2, 3)), parse_word(3, "s2 s1^2 s2"),
                    3));
  // second identity across strand counts
  for (int m = 3; m <= 8; ++m)
    for (int i = 1; i <= m - 2; ++i) {
      Word l = multiply(multiply(sigma_word(m, i, -1), b_generator(i, m)), sigma_word(m, i));
      Word r = multiply(multiply(b_generator(i, m), b_generator(i + 1, m)),
                        invert(b_generator(i, m)));
      CHECK(artin_equal(l, r, m));
    }
}

TEST_CASE("normal form is invariant under free reduction and w w^-1 vanishes") {
  std::mt19937_64 rng(2025);
  for (int t = 0; t < 300; ++t) {
    int m = 3 + t % 4;
    Word w = random_sigma_word(rng, m, 16);
    CHECK(left_normal_form(w, m) == left_normal_form(freely_reduce(w), m));
    CHECK(left_normal_form(multiply(w, invert(w)), m) == GarsideNF{0, {}});
  }
}

TEST_CASE("distinct elements get distinct forms") {
  std::mt19937_64 rng(404);
  for (int t = 0; t < 200; ++t) {
    int m = 3 + t % 3;
    Word w = random_sigma_word(rng, m, 14);
    // w != w sigma_1 and w != w sigma_1^2 in the braid group
    CHECK(!artin_equal(w, multiply(w, sigma_word(m, 1)), m));
    CHECK(!artin_equal(w, multiply(w, sigma_word(m, 1, 2)), m));
  }
}

TEST_CASE("left-weighted structure of computed forms") {
  std::mt19937_64 rng(88);
  auto contains = [](const std::vector<int>& xs, int x) {
    for (int v : xs)
      if (v == x) return true;
    return false;
  };
  for (int t = 0; t < 200; ++t) {
    int m = 4;
    GarsideNF nf = left_normal_form(random_sigma_word(rng, m, 20), m);
    for (const auto& f : nf.factors) {
      CHECK(!f.is_identity());
      CHECK(!f.is_half_twist());
    }
    for (std::size_t j = 0; j + 1 < nf.factors.size(); ++j) {
      auto fin = nf.factors[j].finishing_set();
      for (int i : nf.factors[j + 1].starting_set()) CHECK(contains(fin, i));
    }
  }
}

TEST_CASE("permutation braid sets") {
  PermutationBraid delta = PermutationBraid::half_twist(4);
  CHECK(delta.starting_set() == std::vector<int>{1, 2, 3});
  CHECK(delta.finishing_set() == std::vector<int>{1, 2, 3});
  PermutationBraid s2 = PermutationBraid::generator(4, 2);
  CHECK(s2.starting_set() == std::vector<int>{2});
  CHECK(s2.finishing_set() == std::vector<int>{2});
  CHECK(s2.canonical_length() == 1);
  CHECK(delta.canonical_length() == 6);
}
