#include "rp2braid/acceptance.hpp"

#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rp2braid/artin.hpp"
#include "rp2braid/coset_enum.hpp"
#include "rp2braid/kernel_action.hpp"
#include "rp2braid/p3_model.hpp"
#include "rp2braid/torsion.hpp"
#include "rp2braid/vc_classify.hpp"

namespace rp2braid {

namespace {

// Each check reports the first failure through `fail`; passing checks stay
// silent.
struct Checker {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
  void require(bool cond, const std::string& what) {
    if (!cond) fail(what);
  }
};

std::set<int> divisors_of(int m) {
  std::set<int> out;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) out.insert(d);
  return out;
}

// --- criterion 1: the two order formulas agree -------------------------------

void criterion_orders_agree(Checker& c) {
  for (int n = 2; n <= 200 && c.ok; ++n) {
    for (int r = 0; r <= n && c.ok; ++r) {
      int p = n - r;
      int l = std::gcd(p, 2 * r);
      TorsionSpec spec{1, n, r, l ? 2 * r / l : 0, l ? p / l : 0};
      int lhs = torsion_order(spec);
      int rhs = order_formula_knr(n, r);
      std::ostringstream os;
      os << "n=" << n << " r=" << r << ": torsion_order " << lhs << " vs k-formula " << rhs;
      c.require(lhs == rhs, os.str());
      c.require(lhs == 2 * l1(n, r), "direct gcd form disagrees at n=" + std::to_string(n));
    }
    for (int r = 0; r <= n - 1 && c.ok; ++r)
      c.require(l2(n, r) == l1(n - 1, r), "l2(n,r) != l1(n-1,r) at n=" + std::to_string(n));
  }
}

// --- criterion 2: finite cases by coset enumeration --------------------------

void criterion_finite_cases(Checker& c) {
  auto t1 = todd_coxeter(van_buskirk_presentation(1), {}, 1000);
  c.require(t1.complete() && t1.verify() && t1.index() == 2,
            "|B_1| = " + std::to_string(t1.complete() ? t1.index() : -1) + ", expected 2");

  auto t2 = todd_coxeter(van_buskirk_presentation(2), {}, 100000);
  c.require(t2.complete() && t2.verify() && t2.index() == 16, "|B_2| expected 16");
  if (!c.ok) return;

  auto cay = cayley_from(t2);
  auto prof = cay.profile();
  c.require(prof.unique_involution, "B_2 must have exactly one involution");

  auto pure = cay.pure_elements();
  c.require(pure.size() == 8, "pure part of B_2 expected 8 elements");
  if (!c.ok) return;
  auto pure_prof = cay.profile_of(pure);
  std::map<int, int> want{{1, 1}, {2, 1}, {4, 6}};
  c.require(pure_prof.order_histogram == want, "pure part histogram is not {1:1, 2:1, 4:6}");
  c.require(identify_group(pure_prof) == GroupName{GroupNameKind::Q8, 0},
            "pure part of B_2 not identified as Q8");

  const int factorials[5] = {1, 1, 2, 6, 24};
  for (int n = 2; n <= 4 && c.ok; ++n) {
    auto tn = todd_coxeter(van_buskirk_presentation(n), pure_subgroup_generators(n), 1000000);
    bool good = tn.complete() && tn.verify() && tn.index() == factorials[n];
    std::ostringstream os;
    os << "[B_" << n << " : pure] = " << (tn.complete() ? tn.index() : -1) << ", expected "
       << factorials[n];
    c.require(good, os.str());
  }
}

// --- criterion 3: named element orders at n = 2 -------------------------------

void criterion_named_orders(Checker& c) {
  auto t2 = todd_coxeter(van_buskirk_presentation(2), {}, 100000);
  c.require(t2.complete() && t2.index() == 16, "B_2 enumeration failed");
  if (!c.ok) return;
  c.require(element_order_in(t2, element_a(2)) == 8, "order of a must be 8");
  c.require(element_order_in(t2, element_b(2)) == 4, "order of b must be 4");
  c.require(element_order_in(t2, full_twist(2)) == 2, "order of the full twist must be 2");

  auto cay = cayley_from(t2);
  std::set<int> orders;
  for (int e = 1; e <= cay.order(); ++e) orders.insert(cay.element_order(e));
  std::set<int> want = divisors_of(8);
  for (int d : divisors_of(4)) want.insert(d);
  c.require(orders == want, "element orders of B_2 differ from divisors(8) U divisors(4)");
}

// --- criterion 4: artin-oracle certification ----------------------------------

void criterion_artin(Checker& c) {
  for (int m = 3; m <= 8 && c.ok; ++m) {
    for (int i = 1; i <= m - 2 && c.ok; ++i) {
      Word lhs = multiply(multiply(sigma_word(m, i), b_generator(i, m)), sigma_word(m, i, -1));
      c.require(artin_equal(lhs, b_generator(i + 1, m), m),
                "sigma_i B_i sigma_i^-1 != B_{i+1} at m=" + std::to_string(m) +
                    " i=" + std::to_string(i));
      Word lhs2 = multiply(multiply(sigma_word(m, i, -1), b_generator(i, m)), sigma_word(m, i));
      Word rhs2 = multiply(multiply(b_generator(i, m), b_generator(i + 1, m)),
                           invert(b_generator(i, m)));
      c.require(artin_equal(lhs2, rhs2, m),
                "sigma_i^-1 B_i sigma_i != B_i B_{i+1} B_i^-1 at m=" + std::to_string(m) +
                    " i=" + std::to_string(i));
    }
  }
  for (int m = 2; m <= 8 && c.ok; ++m) {
    Word prod(m);
    for (int i = 1; i <= m - 1; ++i) prod = multiply(prod, b_generator(i, m));
    Word rhs(m);
    for (int i = m - 1; i >= 2; --i) rhs = multiply(rhs, sigma_word(m, i));
    rhs = multiply(rhs, sigma_word(m, 1, 2));
    for (int i = 2; i <= m - 1; ++i) rhs = multiply(rhs, sigma_word(m, i));
    c.require(artin_equal(prod, rhs, m),
              "B_1 .. B_{m-1} != surface word at m=" + std::to_string(m));
  }

  // normal form invariance under random Artin relator insertions
  std::mt19937_64 rng(20240613);
  const int m = 5;
  std::vector<Word> relators;
  for (int i = 1; i <= m - 1; ++i)
    for (int j = i + 2; j <= m - 1; ++j)
      relators.push_back(multiply(multiply(sigma_word(m, i), sigma_word(m, j)),
                                  multiply(sigma_word(m, i, -1), sigma_word(m, j, -1))));
  for (int i = 1; i <= m - 2; ++i) {
    Word w = multiply(multiply(sigma_word(m, i), sigma_word(m, i + 1)), sigma_word(m, i));
    w = multiply(w, invert(multiply(multiply(sigma_word(m, i + 1), sigma_word(m, i)),
                                    sigma_word(m, i + 1))));
    relators.push_back(w);
  }
  std::uniform_int_distribution<int> gen_dist(1, m - 1), sign_dist(0, 1), len_dist(0, 14);
  std::uniform_int_distribution<std::size_t> rel_dist(0, relators.size() - 1);
  for (int t = 0; t < 10000 && c.ok; ++t) {
    std::vector<Letter> ls;
    int len = len_dist(rng);
    for (int i = 0; i < len; ++i) ls.push_back(sigma_letter(gen_dist(rng), sign_dist(rng) ? 1 : -1));
    Word w(m, std::move(ls));
    GarsideNF nf = left_normal_form(w, m);
    Word rel = relators[rel_dist(rng)];
    if (sign_dist(rng)) rel = invert(rel);
    std::uniform_int_distribution<std::size_t> pos_dist(0, w.length());
    std::size_t pos = pos_dist(rng);
    std::vector<Letter> ls2(w.letters().begin(), w.letters().begin() + static_cast<long>(pos));
    ls2.insert(ls2.end(), rel.letters().begin(), rel.letters().end());
    ls2.insert(ls2.end(), w.letters().begin() + static_cast<long>(pos), w.letters().end());
    c.require(left_normal_form(Word(m, std::move(ls2)), m) == nf,
              "normal form changed under relator insertion (trial " + std::to_string(t) + ")");
  }
}

// --- criterion 5: torsion catalog properties ----------------------------------

void criterion_catalog(Checker& c) {
  for (int n = 2; n <= 50 && c.ok; ++n) {
    std::set<int> got;
    for (const CatalogEntry& e : canonical_torsion_reps(n))
      for (int d : divisors_of(e.order)) got.insert(d);
    std::set<int> want = divisors_of(4 * n);
    for (int d : divisors_of(4 * (n - 1))) want.insert(d);
    c.require(got == want, "divisor closure failed at n=" + std::to_string(n));
  }

  for (int n = 2; n <= 10 && c.ok; ++n) {
    for (const CatalogEntry& e : canonical_torsion_reps(n)) {
      if (!c.ok) break;
      Word y = murasugi_element(e.spec);
      int m = permutation_of(y).order();
      bool ab_case = (e.spec.family == 1 && e.spec.r == n) ||
                     (e.spec.family == 2 && e.spec.r == n - 1);
      std::ostringstream where;
      where << "n=" << n << " family=" << e.spec.family << " r=" << e.spec.r;
      if (ab_case) {
        Word ym = power(y, m);
        c.require(permutation_of(ym).is_identity(), "y^m not pure at " + where.str());
        c.require(e.order / std::gcd(e.order, m) == 4, "y^m order != 4 at " + where.str());
      } else {
        c.require((2 * m) % e.order == 0, "order does not divide 2m at " + where.str());
        // cycle structure of omega^{p/l}: p/l disjoint l-cycles
        int p = e.spec.p();
        int l = e.order / 2;
        Word om = power(murasugi_omega(e.spec.family, n, e.spec.r), e.spec.q);
        std::multiset<std::size_t> lens;
        for (const auto& cyc : permutation_of(om).cycles()) lens.insert(cyc.size());
        std::multiset<std::size_t> want;
        if (l >= 2 && e.spec.q != 0)
          for (int t = 0; t < p / l; ++t) want.insert(static_cast<std::size_t>(l));
        c.require(lens == want, "omega power cycle type mismatch at " + where.str());
      }
    }
  }

  for (int n = 2; n <= 50 && c.ok; ++n)
    c.require(!(abelianize(element_alpha(n)) == abelianize(element_beta(n))),
              "alpha and beta abelianisations collide at n=" + std::to_string(n));
}

// --- criterion 6: the P3 model -------------------------------------------------

void criterion_p3(Checker& c) {
  std::vector<Q8> all;
  for (int axis = 0; axis <= 3; ++axis) {
    Q8 base = axis == 0 ? Q8::one() : Q8::tau(axis);
    all.push_back(base);
    all.push_back(-base);
  }
  for (Q8 q1 : all)
    for (Q8 q2 : all)
      for (const F2Word& g : {F2Word::x(), F2Word::y()})
        c.require(act(q1 * q2, g) == act(q1, act(q2, g)),
                  "action not a homomorphism at " + q1.str() + " * " + q2.str());
  for (const F2Word& g : {F2Word::x(), F2Word::y()}) {
    c.require(act(Q8::one(), g) == g && act(Q8::minus_one(), g) == g,
              "centre must act trivially");
    c.require(act(Q8::tau(3), g) == act(Q8::tau(1), act(Q8::tau(2), g)),
              "tau_3 != tau_1 o tau_2 as automorphisms");
  }

  for (int i = 1; i <= 3; ++i)
    c.require(p3_order({F2Word{}, Q8::tau(i)}) == std::optional<int>(4),
              "(1, tau_i) must have order 4");

  for (int axis = 1; axis <= 3 && c.ok; ++axis)
    for (Q8 q : {Q8::tau(axis), -Q8::tau(axis)}) {
      auto fixed = fixed_words_ball(q, 12);
      c.require(fixed.size() == 1 && fixed[0].empty(),
                "fixed words of " + q.str() + " in ball 12 must be {empty}");
    }

  AmalgamWitness wit = amalgam_witness();
  c.require(p3_power(wit.u, 4) == p3_identity(), "u^4 != e");
  c.require(wit.order_u == 4 && wit.order_v == 4, "amalgam generators must have order 4");
  c.require(wit.squares_equal, "u^2 != v^2");
  c.require(wit.uv_inverse_infinite, "u v^-1 must have infinite order");

  auto ball = amalgam_ball(10);
  c.require(ball.size() == 42, "amalgam ball <= 10 syllables must have 42 normal forms");
  std::set<P3Element> images;
  for (const AmalgamElement& a : ball) images.insert(amalgam_to_p3(a, wit.u, wit.v));
  c.require(images.size() == ball.size(), "amalgam normal forms must map injectively");

  P3Element g{F2Word{}, Q8::tau(3)};
  auto cent = centralizer_ball(g, 8);
  std::set<P3Element> want;
  for (int e = 0; e < 4; ++e) want.insert(p3_power(g, e));
  std::set<P3Element> got(cent.begin(), cent.end());
  c.require(got == want && cent.size() == 4,
            "centralizer ball of (1, t3) must be exactly its four powers");
}

// --- criterion 7: kernel action -------------------------------------------------

void criterion_kernel(Checker& c) {
  for (int n = 1; n <= 10 && c.ok; ++n) {
    FreeAut a = conj_alpha_inv(n);  // constructors certify
    FreeAut b = conj_beta_inv(n);
    c.require(a.compose(a).is_identity_on_generators(),
              "(iota_rho2 o phi)^2 != id at rank " + std::to_string(n));
    c.require(b.compose(b).is_identity_on_generators(),
              "(iota_rho o phi)^2 != id at rank " + std::to_string(n));
    FreeAut f = phi(n);
    c.require(f.compose(f).is_identity_on_generators(), "phi^2 != id");
    if (n >= 2) (void)phi_prime(n);
  }

  // phi preserves the B-subgroup
  std::mt19937_64 rng(777);
  for (int t = 0; t < 500 && c.ok; ++t) {
    int n = 3 + static_cast<int>(t % 3);
    FreeAut f = phi(n);
    std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1), len(0, 12);
    std::vector<std::int16_t> ls;
    int L = len(rng);
    for (int i = 0; i < L; ++i) {
      int g = gen(rng);
      ls.push_back(static_cast<std::int16_t>(sign(rng) ? g + 1 : -(g + 1)));
    }
    FreeWord w = FreeWord::from_letters(n, ls);
    c.require(!f.apply(w).contains_generator(0), "phi image of a B-word mentions rho");
  }

  for (int rank = 2; rank <= 4 && c.ok; ++rank)
    for (const FreeAut& a : {conj_alpha_inv(rank), conj_beta_inv(rank)}) {
      auto fixed = fixed_points_ball(a, 6);
      c.require(fixed.size() == 1 && fixed[0].empty(),
                "kernel fixed-point ball rank " + std::to_string(rank) + " must be {empty}");
    }

  // syllable exponent laws on random words
  std::mt19937_64 rng2(4242);
  int tested = 0;
  while (tested < 10000 && c.ok) {
    int n = 2 + static_cast<int>(tested % 3);
    std::uniform_int_distribution<int> gen(0, n - 1), sign(0, 1), len(1, 24);
    std::vector<std::int16_t> ls;
    int L = len(rng2);
    for (int i = 0; i < L; ++i) {
      int g = gen(rng2);
      ls.push_back(static_cast<std::int16_t>(sign(rng2) ? g + 1 : -(g + 1)));
    }
    FreeWord w = FreeWord::from_letters(n, ls);
    if (w.empty()) continue;
    SyllableDecomposition d = syllable_decompose(w, 0);
    if (d.syllable_count() < 1) continue;
    ++tested;
    long long e0 = d.exponents.front(), ek = d.exponents.back();
    SyllableDecomposition da = syllable_decompose(conj_alpha_inv(n).apply(w), 0);
    c.require(da.syllable_count() == d.syllable_count() &&
                  da.exponents.front() == 2 - e0 && da.exponents.back() == -ek - 2,
              "alpha syllable law failed");
    SyllableDecomposition db = syllable_decompose(conj_beta_inv(n).apply(w), 0);
    c.require(db.syllable_count() == d.syllable_count() &&
                  db.exponents.front() == 1 - e0 && db.exponents.back() == -ek - 1,
              "beta syllable law failed");
  }
}

// --- criterion 8: classification reports ----------------------------------------

void criterion_classify(Checker& c) {
  for (int n = 1; n <= 8 && c.ok; ++n) {
    ClassificationReport rep = classify(n);
    FactSet facts = gather_facts(n);
    if (n <= 2) {
      c.require(rep.realized.empty(),
                "infinite realized list must be empty at n=" + std::to_string(n));
    } else {
      std::vector<std::string> want{"Z", "Z2xZ", "Z4*Z2*Z4"};
      c.require(rep.realized == want, "realized list wrong at n=" + std::to_string(n));
    }
    for (const VCCandidate& cand : rep.candidates)
      c.require(replay_fact_chain(cand, facts),
                "fact chain replay failed for " + cand.group_name + " at n=" +
                    std::to_string(n));
  }
}

// --- criterion 9: the ~ relation -------------------------------------------------

void criterion_approx(Checker& c) {
  for (int a = -10; a <= 10 && c.ok; ++a)
    for (int b = -10; b <= 10 && c.ok; ++b)
      for (int cc = -10; cc <= 10 && c.ok; ++cc)
        for (int d = -10; d <= 10; ++d) {
          bool brute = false;
          // sign symmetry (m,k) -> (-m,-k) lets the brute force take m >= 0
          for (int m = 0; m <= 50 && !brute; ++m) {
            long long ma = static_cast<long long>(m) * a;
            long long mb = static_cast<long long>(m) * b;
            for (int k = -50; k <= 50; ++k) {
              if (m == 0 && k == 0) continue;
              if (ma == static_cast<long long>(k) * cc && mb == static_cast<long long>(k) * d) {
                brute = true;
                break;
              }
            }
          }
          if (brute != approx_related(a, b, cc, d)) {
            std::ostringstream os;
            os << "approx_related(" << a << "," << b << "," << cc << "," << d << ") = "
               << approx_related(a, b, cc, d) << " but brute force says " << brute;
            c.fail(os.str());
            return;
          }
        }
}

struct CriterionDef {
  int id;
  const char* name;
  double limit_seconds;
  void (*fn)(Checker&);
};

constexpr CriterionDef kCriteria[] = {
    {1, "order-formula agreement (n <= 200)", 1.0, criterion_orders_agree},
    {2, "finite cases by coset enumeration", 10.0, criterion_finite_cases},
    {3, "named element orders at n = 2", 1.0, criterion_named_orders},
    {4, "artin-oracle certification (m <= 8)", 5.0, criterion_artin},
    {5, "torsion catalog properties (n <= 50)", 5.0, criterion_catalog},
    {6, "P3 model checks", 60.0, criterion_p3},
    {7, "kernel action checks", 120.0, criterion_kernel},
    {8, "classification reports (n <= 8)", 1.0, criterion_classify},
    {9, "~ relation vs brute force", 5.0, criterion_approx},
};

}  // namespace

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "orders") return {1, 5, 9};
  if (suite == "finite-cases") return {2, 3};
  if (suite == "p3") return {6};
  if (suite == "kernel") return {4, 7};
  if (suite == "classify") return {8};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9};
  throw std::invalid_argument("unknown suite '" + suite +
                              "' (want orders, finite-cases, p3, kernel, classify or all)");
}

CriterionResult run_criterion(int id) {
  for (const CriterionDef& def : kCriteria) {
    if (def.id != id) continue;
    CriterionResult r;
    r.id = id;
    r.name = def.name;
    r.limit_seconds = def.limit_seconds;
    Checker c;
    auto start = std::chrono::steady_clock::now();
    def.fn(c);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = c.ok && r.seconds < def.limit_seconds;
    if (!c.ok)
      r.detail = c.detail;
    else if (r.seconds >= def.limit_seconds)
      r.detail = "time limit exceeded";
    else
      r.detail = "ok";
    return r;
  }
  throw std::invalid_argument("unknown criterion id " + std::to_string(id));
}

std::vector<CriterionResult> run_suite(const std::string& suite) {
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(suite)) out.push_back(run_criterion(id));
  return out;
}

std::string format_criterion_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " ["
     << static_cast<int>(r.seconds * 1000) << " ms]";
  if (!r.passed) os << " -- " << r.detail;
  return os.str();
}

}  // namespace rp2braid
