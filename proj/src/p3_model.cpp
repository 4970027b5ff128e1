#include "rp2braid/p3_model.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace rp2braid {

namespace {

// axis multiplication: i*j = k, j*k = i, k*i = j, squares = -1
constexpr int kAxisMul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr int kAxisSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};

}  // namespace

Q8 Q8::tau(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("tau index must be 1, 2 or 3");
  return Q8(1, i);
}

Q8 Q8::operator*(Q8 o) const {
  int axis = kAxisMul[axis_][o.axis_];
  int sign = sign_ * o.sign_ * kAxisSign[axis_][o.axis_];
  return Q8(sign, axis);
}

Q8 Q8::inverse() const {
  if (axis_ == 0) return *this;      // (+-1)^-1 = +-1
  return Q8(-sign_, axis_);          // (s a)^-1 = -s a for imaginary axes
}

int Q8::order() const {
  if (axis_ == 0) return sign_ > 0 ? 1 : 2;
  return 4;
}

std::string Q8::str() const {
  std::string s = sign_ < 0 ? "-" : "";
  return s + (axis_ == 0 ? "1" : "t" + std::to_string(axis_));
}

std::optional<Q8> Q8::parse(std::string_view text) {
  int sign = 1;
  if (!text.empty() && text.front() == '-') {
    sign = -1;
    text.remove_prefix(1);
  }
  if (text == "1") return Q8(sign, 0);
  if (text.size() == 2 && text[0] == 't' && text[1] >= '1' && text[1] <= '3')
    return Q8(sign, text[1] - '0');
  return std::nullopt;
}

F2Word F2Word::from_letters(const std::vector<std::int8_t>& letters) {
  F2Word w;
  for (std::int8_t l : letters) {
    if (l == 0 || l > 2 || l < -2) throw std::invalid_argument("bad F2 letter");
    if (!w.letters_.empty() && w.letters_.back() == -l)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

F2Word F2Word::x() { return from_letters({1}); }
F2Word F2Word::y() { return from_letters({2}); }

F2Word F2Word::operator*(const F2Word& o) const {
  F2Word w = *this;
  for (std::int8_t l : o.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -l)
      w.letters_.pop_back();
    else
      w.letters_.push_back(l);
  }
  return w;
}

F2Word F2Word::inverse() const {
  F2Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    w.letters_.push_back(static_cast<std::int8_t>(-*it));
  return w;
}

F2Word F2Word::pow(int k) const {
  F2Word base = k >= 0 ? *this : inverse();
  int e = k >= 0 ? k : -k;
  F2Word acc;
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

std::string F2Word::str() const {
  if (letters_.empty()) return "e";
  std::ostringstream os;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    if (i) os << ' ';
    os << (std::abs(letters_[i]) == 1 ? 'x' : 'y');
    int run = static_cast<int>(j - i) * (letters_[i] > 0 ? 1 : -1);
    if (run != 1) os << '^' << run;
    i = j;
  }
  return os.str();
}

F2Word F2Word::parse(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  std::vector<std::int8_t> ls;
  while (is >> tok) {
    if (tok == "e" || tok == "1") continue;
    std::size_t caret = tok.find('^');
    std::string base = tok.substr(0, caret == std::string::npos ? tok.size() : caret);
    int exp = 1;
    if (caret != std::string::npos) {
      try {
        exp = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in F2 token '" + tok + "'");
      }
    }
    std::int8_t letter;
    if (base == "x")
      letter = 1;
    else if (base == "y")
      letter = 2;
    else
      throw std::invalid_argument("bad F2 token '" + tok + "'");
    if (exp < 0) letter = static_cast<std::int8_t>(-letter);
    for (int t = 0; t < std::abs(exp); ++t) ls.push_back(letter);
  }
  return from_letters(ls);
}

F2Word act(Q8 q, const F2Word& w) {
  // letter images per axis; index by letter+2 (so -2,-1,_,1,2)
  static constexpr std::int8_t kMap[4][5] = {
      {-2, -1, 0, 1, 2},   // central: identity
      {-1, -2, 0, 2, 1},   // tau_1: x<->y
      {1, 2, 0, -2, -1},   // tau_2: x -> y^-1, y -> x^-1
      {2, 1, 0, -1, -2},   // tau_3: inverts both letters
  };
  std::vector<std::int8_t> out;
  out.reserve(w.length());
  for (std::int8_t l : w.letters()) out.push_back(kMap[q.axis()][l + 2]);
  return F2Word::from_letters(out);
}

P3Element p3_identity() { return {F2Word{}, Q8::one()}; }

P3Element p3_multiply(const P3Element& a, const P3Element& b) {
  return {a.w * act(a.q, b.w), a.q * b.q};
}

P3Element p3_invert(const P3Element& a) {
  Q8 qi = a.q.inverse();
  return {act(qi, a.w.inverse()), qi};
}

P3Element p3_power(const P3Element& a, int k) {
  P3Element base = k >= 0 ? a : p3_invert(a);
  int e = k >= 0 ? k : -k;
  P3Element acc = p3_identity();
  for (int i = 0; i < e; ++i) acc = p3_multiply(acc, base);
  return acc;
}

std::optional<int> p3_order(const P3Element& g) {
  const int m = g.q.order();
  P3Element gm = p3_power(g, m);
  if (!gm.w.empty()) return std::nullopt;
  for (int e = 1; e <= m; ++e)
    if (p3_power(g, e) == p3_identity()) return e;
  throw std::logic_error("order computation failed");
}

namespace {

// Enumerates reduced words of length <= radius in shortlex order
// (x < x^-1 < y < y^-1) and calls fn on each.
template <typename Fn>
void for_each_reduced_word(int radius, Fn&& fn) {
  static constexpr std::int8_t kOrder[4] = {1, -1, 2, -2};
  std::vector<std::int8_t> cur;
  fn(F2Word{});
  for (int len = 1; len <= radius; ++len) {
    // depth-first over words of exactly this length, letters in order
    std::vector<int> choice(static_cast<std::size_t>(len), 0);
    cur.clear();
    int depth = 0;
    while (depth >= 0) {
      if (depth == len) {
        fn(F2Word::from_letters(cur));
        --depth;
        cur.pop_back();
        continue;
      }
      int& c = choice[static_cast<std::size_t>(depth)];
      bool advanced = false;
      while (c < 4) {
        std::int8_t letter = kOrder[c];
        ++c;
        if (!cur.empty() && cur.back() == -letter) continue;
        cur.push_back(letter);
        ++depth;
        if (depth < len) choice[static_cast<std::size_t>(depth)] = 0;
        advanced = true;
        break;
      }
      if (!advanced) {
        c = 0;
        --depth;
        if (!cur.empty()) cur.pop_back();
      }
    }
  }
}

}  // namespace

std::vector<F2Word> fixed_words_ball(Q8 q, int radius) {
  if (q.is_central())
    throw std::invalid_argument("central elements act trivially; every word is fixed");
  std::vector<F2Word> out;
  for_each_reduced_word(radius, [&](const F2Word& w) {
    if (act(q, w) == w) out.push_back(w);
  });
  return out;
}

std::vector<P3Element> centralizer_ball(const P3Element& g, int radius) {
  static constexpr int kQ8Count = 8;
  std::vector<Q8> qs;
  qs.reserve(kQ8Count);
  for (int axis = 0; axis <= 3; ++axis)
    for (int sign : {1, -1})
      qs.push_back(axis == 0 ? (sign > 0 ? Q8::one() : Q8::minus_one())
                             : (sign > 0 ? Q8::tau(axis) : -Q8::tau(axis)));
  std::vector<P3Element> out;
  for_each_reduced_word(radius, [&](const F2Word& w) {
    for (Q8 q : qs) {
      P3Element h{w, q};
      if (p3_multiply(h, g) == p3_multiply(g, h)) out.push_back(h);
    }
  });
  return out;
}

AmalgamWitness amalgam_witness() {
  AmalgamWitness wit;
  wit.u = {F2Word{}, Q8::tau(3)};
  wit.v = {F2Word::x(), Q8::tau(3)};
  wit.u_squared = p3_power(wit.u, 2);
  wit.v_squared = p3_power(wit.v, 2);
  wit.uv_inverse = p3_multiply(wit.u, p3_invert(wit.v));
  auto ou = p3_order(wit.u), ov = p3_order(wit.v);
  wit.order_u = ou.value_or(0);
  wit.order_v = ov.value_or(0);
  wit.squares_equal = wit.u_squared == wit.v_squared;
  wit.uv_inverse_infinite = !p3_order(wit.uv_inverse).has_value();
  return wit;
}

std::string format_p3(const P3Element& g) {
  return "( " + g.w.str() + " , " + g.q.str() + " )";
}

P3Element parse_p3(std::string_view text) {
  std::string t(text);
  auto fail = [&]() { throw std::invalid_argument("bad P3 element '" + t + "'"); };
  std::size_t open = t.find('(');
  std::size_t close = t.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open) fail();
  std::string inner = t.substr(open + 1, close - open - 1);
  std::size_t comma = inner.rfind(',');
  if (comma == std::string::npos) fail();
  std::string wpart = inner.substr(0, comma);
  std::string qpart = inner.substr(comma + 1);
  auto strip = [](std::string& s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  };
  strip(wpart);
  strip(qpart);
  auto q = Q8::parse(qpart);
  if (!q) fail();
  return {F2Word::parse(wpart), *q};
}

}  // namespace rp2braid
