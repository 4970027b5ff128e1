#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rp2braid/word.hpp"

namespace rp2braid {

/// Parameters (i, n, r, s, q) of a torsion representative
/// A_i(n, r, s, q) = xi^s omega^q, with xi = rho_r sigma_{r-1} .. sigma_1 and
/// omega = sigma_{r+1} .. sigma_{n-1} (family 1) or
/// omega = sigma_{r+1} .. sigma_{n-1} sigma_{r+1} (family 2).
struct TorsionSpec {
  int family;  // 1 or 2
  int n;
  int r;
  int s;
  int q;

  int p() const { return family == 1 ? n - r : n - r - 1; }
  /// Throws std::invalid_argument when the parameters violate the admissible
  /// ranges, the degeneracy rules (r = 0 forces s = 0, p = 0 forces q = 0,
  /// family 2 needs r <= n-2 when q != 0) or the ~ relation
  /// (p, q) ~ (2r, s).
  void validate() const;
  bool is_canonical() const;  // s = 2r/l, q = p/l with l = gcd(p, 2r)
};

/// (a,b) ~ (c,d): some (m,k) != (0,0) has m(a,b) = k(c,d); equivalent to
/// ad = bc over the integers.
bool approx_related(long long a, long long b, long long c, long long d);

Word element_a(int n);      // sigma_{n-1}^-1 .. sigma_1^-1 rho_1, order 4n
Word element_b(int n);      // sigma_{n-2}^-1 .. sigma_1^-1 rho_1, order 4(n-1)
Word full_twist(int n);     // (sigma_1 .. sigma_{n-1})^n
Word element_alpha(int n);  // rho_n .. rho_1 = a^n
Word element_beta(int n);   // rho_{n-1} .. rho_1 = b^{n-1}

Word murasugi_xi(int n, int r);
Word murasugi_omega(int family, int n, int r);
Word murasugi_element(const TorsionSpec& spec);  // validates

struct CatalogEntry {
  TorsionSpec spec;
  int order;
};

/// One representative per family and admissible r, with s = 2r/l, q = p/l,
/// l = gcd(p, 2r); every finite-order element is conjugate to a power of one
/// of these.
std::vector<CatalogEntry> canonical_torsion_reps(int n);

/// Order 2 gcd(p, 2r) of a canonical representative; throws on non-canonical
/// specs.
int torsion_order(const TorsionSpec& spec);

/// The k-based form of the same order: k = (n-r)/2 when n, r both even, else
/// n-r; the order is 2 gcd(n,r) for odd k and 4 gcd(n,k) for even k.
int order_formula_knr(int n, int r);

int l1(int n, int r);  // gcd(2r, n-r)
int l2(int n, int r);  // gcd(2r, n-r-1)

enum class Order4Class { Alpha, Beta };

/// Evidence that a word has a given finite order, produced by a module with
/// a decidable order computation. order4_class_of refuses to classify
/// without one.
struct OrderCertificate {
  enum class Source { CosetTable, P3Model, CatalogPower };
  Source source;
  int order;
  std::string detail;
};

struct Order4Result {
  std::optional<Order4Class> cls;  // empty = rejected
  std::string reason;
};

/// Conjugacy class of an order-4 pure braid: Alpha iff the abelianisation
/// matches alpha's (0, n mod 2), Beta iff it matches beta's
/// (0, (n-1) mod 2). Rejects non-pure words, certificates of order != 4, and
/// sigma-odd abelianisations.
Order4Result order4_class_of(const Word& w, const OrderCertificate& cert);

}  // namespace rp2braid
