#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rp2braid {

/// An element of the quaternion group Q8 = {±1, ±i, ±j, ±k}, with
/// tau_1 = i, tau_2 = j, tau_3 = k. The image of the full twist is -1.
class Q8 {
 public:
  constexpr Q8() = default;

  static constexpr Q8 one() { return Q8(1, 0); }
  static constexpr Q8 minus_one() { return Q8(-1, 0); }
  static Q8 tau(int i);  // i in {1, 2, 3}

  int sign() const { return sign_; }
  int axis() const { return axis_; }  // 0 = central, 1 = i, 2 = j, 3 = k
  bool is_central() const { return axis_ == 0; }

  Q8 operator*(Q8 o) const;
  Q8 inverse() const;
  Q8 operator-() const { return Q8(-sign_, axis_); }
  int order() const;

  std::string str() const;  // "1", "-1", "t1", "-t1", ...
  static std::optional<Q8> parse(std::string_view text);

  friend auto operator<=>(const Q8&, const Q8&) = default;

 private:
  constexpr Q8(int sign, int axis) : sign_(static_cast<std::int8_t>(sign)),
                                     axis_(static_cast<std::int8_t>(axis)) {}
  std::int8_t sign_ = 1;
  std::int8_t axis_ = 0;
};

/// A freely reduced word in F2 = F(x, y). Letters are +1/-1 (x, x^-1) and
/// +2/-2 (y, y^-1).
class F2Word {
 public:
  F2Word() = default;
  static F2Word from_letters(const std::vector<std::int8_t>& letters);  // reduces
  static F2Word x();
  static F2Word y();

  const std::vector<std::int8_t>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  F2Word operator*(const F2Word& o) const;
  F2Word inverse() const;
  F2Word pow(int k) const;

  std::string str() const;  // "x y^-1", empty word is "e"
  static F2Word parse(std::string_view text);  // throws std::invalid_argument

  friend auto operator<=>(const F2Word&, const F2Word&) = default;

 private:
  std::vector<std::int8_t> letters_;
};

/// Letterwise action of Q8 on F2; the centre {±1} acts trivially, so the
/// action factors through Q8/{±1}:
///   tau_1: x -> y,    y -> x
///   tau_2: x -> y^-1, y -> x^-1
///   tau_3: x -> x^-1, y -> y^-1
F2Word act(Q8 q, const F2Word& w);

/// Element (w, q) of F2 x| Q8 with the product
/// (w1, q1)(w2, q2) = (w1 act(q1, w2), q1 q2).
struct P3Element {
  F2Word w;
  Q8 q;

  friend auto operator<=>(const P3Element&, const P3Element&) = default;
};

P3Element p3_identity();
P3Element p3_multiply(const P3Element& a, const P3Element& b);
P3Element p3_invert(const P3Element& a);
P3Element p3_power(const P3Element& a, int k);

/// Exact order; std::nullopt means infinite. Finite iff the F2 part of
/// g^(order of q) vanishes, the kernel being torsion free.
std::optional<int> p3_order(const P3Element& g);

/// All reduced words of length <= radius fixed by act(q, .), in shortlex
/// order (x < x^-1 < y < y^-1). Throws std::invalid_argument for central q,
/// which fixes everything.
std::vector<F2Word> fixed_words_ball(Q8 q, int radius);

/// All elements (w, q) with |w| <= radius commuting with g, canonical order.
std::vector<P3Element> centralizer_ball(const P3Element& g, int radius);

/// The concrete amalgam witness u = (1, tau_3), v = (x, tau_3) together with
/// the checked facts that make <u, v> a copy of Z4 *_{Z2} Z4: both have
/// order 4, u^2 = v^2, and u v^-1 has infinite order.
struct AmalgamWitness {
  P3Element u, v;
  P3Element u_squared, v_squared, uv_inverse;
  int order_u = 0, order_v = 0;
  bool squares_equal = false;
  bool uv_inverse_infinite = false;

  bool valid() const {
    return order_u == 4 && order_v == 4 && squares_equal && uv_inverse_infinite;
  }
};

AmalgamWitness amalgam_witness();

std::string format_p3(const P3Element& g);                 // "( x y^-1 , t3 )"
P3Element parse_p3(std::string_view text);                 // throws std::invalid_argument

}  // namespace rp2braid
