#include "rp2braid/torsion.hpp"

#include <numeric>
#include <stdexcept>
#include <set>

#include "doctest.h"
#include "rp2braid/coset_enum.hpp"

using namespace rp2braid;

namespace {

// brute-force oracle for the ~ relation, |m|, |k| <= bound
bool approx_brute(int a, int b, int c, int d, int bound = 50) {
  for (int m = -bound; m <= bound; ++m)
    for (int k = -bound; k <= bound; ++k) {
      if (m == 0 && k == 0) continue;
      if (static_cast<long long>(m) * a == static_cast<long long>(k) * c &&
          static_cast<long long>(m) * b == static_cast<long long>(k) * d)
        return true;
    }
  return false;
}

TorsionSpec canonical_spec(int family, int n, int r) {
  int p = family == 1 ? n - r : n - r - 1;
  int l = std::gcd(p, 2 * r);
  return {family, n, r, l ? 2 * r / l : 0, l ? p / l : 0};
}

}  // namespace

TEST_CASE("approx relation agrees with brute force on spot checks") {
  CHECK(approx_related(0, 0, 1, 2));
  CHECK(approx_related(2, 1, 4, 2));
  CHECK(!approx_related(1, 2, 2, 1));
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int c = -4; c <= 4; ++c)
        for (int d = -4; d <= 4; ++d)
          CHECK(approx_related(a, b, c, d) == approx_brute(a, b, c, d));
}

TEST_CASE("named element words") {
  CHECK(element_alpha(3) == parse_word(3, "r3 r2 r1"));
  CHECK(element_beta(3) == parse_word(3, "r2 r1"));
  CHECK(full_twist(2) == parse_word(2, "s1^2"));
  CHECK(full_twist(3) == parse_word(3, "s1 s2 s1 s2 s1 s2"));
  CHECK(element_a(2) == parse_word(2, "s1^-1 r1"));
  CHECK(element_b(2) == parse_word(2, "r1"));
  CHECK(element_a(4) == parse_word(4, "s3^-1 s2^-1 s1^-1 r1"));
  CHECK_THROWS_AS(element_a(1), std::invalid_argument);
}

TEST_CASE("murasugi element words") {
  CHECK(murasugi_element(TorsionSpec{1, 4, 0, 0, 1}) == parse_word(4, "s1 s2 s3"));
  CHECK(murasugi_element(TorsionSpec{1, 3, 3, 1, 0}) == parse_word(3, "r3 s2 s1"));
  CHECK(murasugi_element(TorsionSpec{2, 3, 2, 1, 0}) == parse_word(3, "r2 s1"));
  // family 2 omega repeats its first letter
  CHECK(murasugi_omega(2, 4, 0) == parse_word(4, "s1 s2 s3 s1"));
  CHECK(murasugi_omega(1, 4, 0) == parse_word(4, "s1 s2 s3"));
}

TEST_CASE("omega permutations are the quoted cycles") {
  // family 1: (1, n, ..., 2); family 2: (1, n, ..., 3)
  CHECK(permutation_of(murasugi_omega(1, 4, 0)).cycle_string() == "(1 4 3 2)");
  CHECK(permutation_of(murasugi_omega(2, 4, 0)).cycle_string() == "(1 4 3)");
  CHECK(permutation_of(murasugi_omega(1, 5, 0)).order() == 5);
  CHECK(permutation_of(murasugi_omega(2, 5, 0)).order() == 4);
}

TEST_CASE("murasugi element validation") {
  CHECK_THROWS_AS(murasugi_element(TorsionSpec{1, 4, 0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(murasugi_element(TorsionSpec{1, 4, 4, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(murasugi_element(TorsionSpec{2, 4, 3, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(murasugi_element(TorsionSpec{3, 4, 0, 0, 1}), std::invalid_argument);
  // (p, q) ~ (2r, s) violation
  CHECK_THROWS_AS(murasugi_element(TorsionSpec{1, 4, 2, 1, 1}), std::invalid_argument);
}

TEST_CASE("canonical catalog matches the quoted cases") {
  // n=2 family 1 r=2: the element a, order 8
  auto reps2 = canonical_torsion_reps(2);
  bool found_a = false;
  for (const auto& e : reps2)
    if (e.spec.family == 1 && e.spec.r == 2) {
      CHECK(e.spec.s == 1);
      CHECK(e.spec.q == 0);
      CHECK(e.order == 8);
      found_a = true;
    }
  CHECK(found_a);

  // n=3 family 1 r=2: full twist pattern, order 2
  for (const auto& e : canonical_torsion_reps(3))
    if (e.spec.family == 1 && e.spec.r == 2) {
      CHECK(e.spec.s == 4);
      CHECK(e.spec.q == 1);
      CHECK(e.order == 2);
    }

  // n=4 family 2 r=3: order 12 = 4(n-1)
  for (const auto& e : canonical_torsion_reps(4))
    if (e.spec.family == 2 && e.spec.r == 3) CHECK(e.order == 12);
}

TEST_CASE("torsion_order formula and edge cases") {
  CHECK(torsion_order(canonical_spec(1, 4, 4)) == 16);
  CHECK(torsion_order(canonical_spec(1, 3, 1)) == 4);
  CHECK(torsion_order(canonical_spec(1, 3, 2)) == 2);
  // non-canonical rejected
  CHECK_THROWS_AS(torsion_order(TorsionSpec{1, 4, 2, 4, 2}), std::invalid_argument);
}

TEST_CASE("k-based order formula") {
  CHECK(order_formula_knr(4, 2) == 4);
  CHECK(order_formula_knr(3, 1) == 4);
  CHECK(order_formula_knr(5, 5) == 20);
  for (int n = 2; n <= 60; ++n)
    for (int r = 0; r <= n; ++r) CHECK(order_formula_knr(n, r) == 2 * l1(n, r));
}

TEST_CASE("catalog orders from the enumerated group at n = 2") {
  // oracle: orders of the catalog words inside the 16-element group
  auto t = todd_coxeter(van_buskirk_presentation(2), {}, 10000);
  REQUIRE(t.complete());
  for (const auto& e : canonical_torsion_reps(2))
    CHECK(element_order_in(t, murasugi_element(e.spec)) == e.order);
}

TEST_CASE("order-4 classification") {
  OrderCertificate cat{OrderCertificate::Source::CatalogPower, 4, "alpha"};
  auto res = order4_class_of(element_alpha(4), cat);
  CHECK(res.cls == Order4Class::Alpha);
  res = order4_class_of(invert(element_beta(4)), cat);
  CHECK(res.cls == Order4Class::Beta);

  // full twist carries an order-2 certificate: rejected
  OrderCertificate two{OrderCertificate::Source::CatalogPower, 2, "full twist"};
  res = order4_class_of(full_twist(4), two);
  CHECK(!res.cls.has_value());

  // non-pure word rejected even with an order-4 certificate
  res = order4_class_of(parse_word(4, "s1"), cat);
  CHECK(!res.cls.has_value());

  // alpha and beta separate for many n
  for (int n = 2; n <= 20; ++n) {
    CHECK(order4_class_of(element_alpha(n), cat).cls == Order4Class::Alpha);
    CHECK(order4_class_of(element_beta(n), cat).cls == Order4Class::Beta);
  }
}

TEST_CASE("divisor closure at small n") {
  for (int n = 2; n <= 12; ++n) {
    std::set<int> divisors;
    for (const auto& e : canonical_torsion_reps(n)) {
      for (int d = 1; d <= e.order; ++d)
        if (e.order % d == 0) divisors.insert(d);
    }
    std::set<int> want;
    for (int d = 1; d <= 4 * n; ++d)
      if ((4 * n) % d == 0 || (4 * (n - 1)) % d == 0) want.insert(d);
    CHECK(divisors == want);
  }
}
