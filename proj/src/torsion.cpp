#include "rp2braid/torsion.hpp"

#include <numeric>
#include <stdexcept>

namespace rp2braid {

bool approx_related(long long a, long long b, long long c, long long d) {
  return a * d == b * c;
}

void TorsionSpec::validate() const {
  if (family != 1 && family != 2) throw std::invalid_argument("family must be 1 or 2");
  if (n < 2) throw std::invalid_argument("torsion specs need n >= 2");
  int rmax = family == 1 ? n : n - 1;
  if (r < 0 || r > rmax) throw std::invalid_argument("r out of range for the family");
  if (r == 0 && s != 0) throw std::invalid_argument("r = 0 forces s = 0");
  if (p() == 0 && q != 0) throw std::invalid_argument("p = 0 forces q = 0");
  if (family == 2 && q != 0 && r > n - 2)
    throw std::invalid_argument("family 2 needs r <= n-2 when q != 0");
  if (!approx_related(p(), q, 2 * r, s))
    throw std::invalid_argument("(p, q) and (2r, s) are not ~-related");
}

bool TorsionSpec::is_canonical() const {
  int l = std::gcd(p(), 2 * r);
  if (l == 0) return s == 0 && q == 0;  // r = 0 and p = 0 cannot both happen for n >= 2
  return s == 2 * r / l && q == p() / l;
}

Word element_a(int n) {
  if (n < 2) throw std::invalid_argument("element a needs n >= 2");
  Word w(n);
  for (int i = n - 1; i >= 1; --i) w = multiply(w, sigma_word(n, i, -1));
  return multiply(w, rho_word(n, 1));
}

Word element_b(int n) {
  if (n < 2) throw std::invalid_argument("element b needs n >= 2");
  Word w(n);
  for (int i = n - 2; i >= 1; --i) w = multiply(w, sigma_word(n, i, -1));
  return multiply(w, rho_word(n, 1));
}

Word full_twist(int n) {
  if (n < 1) throw std::invalid_argument("full twist needs n >= 1");
  Word base(n);
  for (int i = 1; i <= n - 1; ++i) base = multiply(base, sigma_word(n, i));
  return power(base, n);
}

Word element_alpha(int n) {
  if (n < 2) throw std::invalid_argument("alpha needs n >= 2");
  Word w(n);
  for (int j = n; j >= 1; --j) w = multiply(w, rho_word(n, j));
  return w;
}

Word element_beta(int n) {
  if (n < 2) throw std::invalid_argument("beta needs n >= 2");
  Word w(n);
  for (int j = n - 1; j >= 1; --j) w = multiply(w, rho_word(n, j));
  return w;
}

Word murasugi_xi(int n, int r) {
  if (r == 0) return Word(n);
  Word w = rho_word(n, r);
  for (int i = r - 1; i >= 1; --i) w = multiply(w, sigma_word(n, i));
  return w;
}

Word murasugi_omega(int family, int n, int r) {
  Word w(n);
  for (int i = r + 1; i <= n - 1; ++i) w = multiply(w, sigma_word(n, i));
  if (family == 2 && r + 1 <= n - 1) w = multiply(w, sigma_word(n, r + 1));
  return w;
}

Word murasugi_element(const TorsionSpec& spec) {
  spec.validate();
  return multiply(power(murasugi_xi(spec.n, spec.r), spec.s),
                  power(murasugi_omega(spec.family, spec.n, spec.r), spec.q));
}

std::vector<CatalogEntry> canonical_torsion_reps(int n) {
  if (n < 2) throw std::invalid_argument("catalog needs n >= 2");
  std::vector<CatalogEntry> out;
  for (int family : {1, 2}) {
    int rmax = family == 1 ? n : n - 1;
    for (int r = 0; r <= rmax; ++r) {
      int p = family == 1 ? n - r : n - r - 1;
      int l = std::gcd(p, 2 * r);
      TorsionSpec spec{family, n, r, l ? 2 * r / l : 0, l ? p / l : 0};
      out.push_back({spec, 2 * l});
    }
  }
  return out;
}

int torsion_order(const TorsionSpec& spec) {
  spec.validate();
  if (!spec.is_canonical())
    throw std::invalid_argument("torsion_order needs a canonical spec (s = 2r/l, q = p/l)");
  return 2 * std::gcd(spec.p(), 2 * spec.r);
}

int order_formula_knr(int n, int r) {
  if (n < 2 || r < 0 || r > n) throw std::invalid_argument("need n >= 2 and 0 <= r <= n");
  int k = (n % 2 == 0 && r % 2 == 0) ? (n - r) / 2 : n - r;
  if (k % 2 != 0) return 2 * std::gcd(n, r);
  return 4 * std::gcd(n, k);
}

int l1(int n, int r) { return std::gcd(2 * r, n - r); }
int l2(int n, int r) { return std::gcd(2 * r, n - r - 1); }

Order4Result order4_class_of(const Word& w, const OrderCertificate& cert) {
  if (cert.order != 4)
    return {std::nullopt, "certificate attests order " + std::to_string(cert.order) + ", not 4"};
  if (!permutation_of(w).is_identity()) return {std::nullopt, "word is not a pure braid"};
  const int n = w.strands();
  AbelianImage ab = abelianize(w);
  if (ab == AbelianImage{0, n % 2}) return {Order4Class::Alpha, ""};
  if (ab == AbelianImage{0, (n - 1) % 2}) return {Order4Class::Beta, ""};
  return {std::nullopt, "abelianisation matches neither alpha nor beta"};
}

}  // namespace rp2braid
