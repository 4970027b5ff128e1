#include "rp2braid/artin.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rp2braid {

PermutationBraid::PermutationBraid(int m) : img_(static_cast<std::size_t>(m)) {
  if (m < 1) throw std::invalid_argument("strand count must be positive");
  std::iota(img_.begin(), img_.end(), 1);
}

PermutationBraid PermutationBraid::generator(int m, int i) {
  if (i < 1 || i > m - 1) throw std::invalid_argument("generator index out of range");
  PermutationBraid a(m);
  std::swap(a.img_[static_cast<std::size_t>(i) - 1], a.img_[static_cast<std::size_t>(i)]);
  return a;
}

PermutationBraid PermutationBraid::half_twist(int m) {
  PermutationBraid a(m);
  for (int i = 1; i <= m; ++i) a.img_[static_cast<std::size_t>(i) - 1] = m + 1 - i;
  return a;
}

bool PermutationBraid::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (image_of(i) != i) return false;
  return true;
}

bool PermutationBraid::is_half_twist() const {
  for (int i = 1; i <= size(); ++i)
    if (image_of(i) != size() + 1 - i) return false;
  return true;
}

bool PermutationBraid::starts_with(int i) const { return image_of(i) > image_of(i + 1); }

bool PermutationBraid::finishes_with(int i) const {
  // strands ending at i, i+1 cross iff their start positions are inverted
  int a = 0, b = 0;
  for (int x = 1; x <= size(); ++x) {
    if (image_of(x) == i) a = x;
    if (image_of(x) == i + 1) b = x;
  }
  return a > b;
}

std::vector<int> PermutationBraid::starting_set() const {
  std::vector<int> s;
  for (int i = 1; i <= size() - 1; ++i)
    if (starts_with(i)) s.push_back(i);
  return s;
}

std::vector<int> PermutationBraid::finishing_set() const {
  std::vector<int> f;
  for (int i = 1; i <= size() - 1; ++i)
    if (finishes_with(i)) f.push_back(i);
  return f;
}

PermutationBraid PermutationBraid::append_generator(int i) const {
  PermutationBraid out = *this;
  for (int x = 1; x <= size(); ++x) {
    int y = out.img_[static_cast<std::size_t>(x) - 1];
    if (y == i)
      out.img_[static_cast<std::size_t>(x) - 1] = i + 1;
    else if (y == i + 1)
      out.img_[static_cast<std::size_t>(x) - 1] = i;
  }
  return out;
}

PermutationBraid PermutationBraid::strip_generator(int i) const {
  // sigma_i^-1 A: pre-compose with the crossing at positions i, i+1
  PermutationBraid out = *this;
  std::swap(out.img_[static_cast<std::size_t>(i) - 1], out.img_[static_cast<std::size_t>(i)]);
  return out;
}

PermutationBraid PermutationBraid::tau() const {
  PermutationBraid out(size());
  for (int i = 1; i <= size(); ++i)
    out.img_[static_cast<std::size_t>(i) - 1] = size() + 1 - image_of(size() + 1 - i);
  return out;
}

int PermutationBraid::canonical_length() const {
  int inv = 0;
  for (int i = 1; i <= size(); ++i)
    for (int j = i + 1; j <= size(); ++j)
      if (image_of(i) > image_of(j)) ++inv;
  return inv;
}

std::string PermutationBraid::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) os << ' ';
    os << image_of(i);
  }
  os << ']';
  return os.str();
}

namespace {

// One left-weighting sweep: for each adjacent pair (A, B), slide every
// generator in S(B) \ F(A) from the head of B to the tail of A. Returns true
// if anything moved.
bool left_weight_sweep(std::vector<PermutationBraid>& fs) {
  bool changed = false;
  for (std::size_t j = 0; j + 1 < fs.size(); ++j) {
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 1; i <= fs[j].size() - 1; ++i) {
        if (fs[j + 1].starts_with(i) && !fs[j].finishes_with(i)) {
          fs[j] = fs[j].append_generator(i);
          fs[j + 1] = fs[j + 1].strip_generator(i);
          moved = true;
          changed = true;
        }
      }
    }
  }
  return changed;
}

}  // namespace

GarsideNF left_normal_form(const Word& w, int m) {
  if (m < 1) throw std::invalid_argument("strand count must be positive");
  int power = 0;
  std::vector<PermutationBraid> fs;
  const PermutationBraid delta = PermutationBraid::half_twist(m);
  for (const Letter& l : w.letters()) {
    if (l.gen.kind != GenKind::Sigma)
      throw std::invalid_argument("left_normal_form requires a sigma-only word");
    if (l.gen.index > m - 1) throw std::invalid_argument("generator index exceeds strand count");
    if (l.exp > 0) {
      fs.push_back(PermutationBraid::generator(m, l.gen.index));
    } else {
      // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); pushing Delta^-1 leftwards
      // tau-twists every factor accumulated so far. Delta sigma_i^-1 is Delta
      // with its final crossing undone, a crossing on the output side.
      power -= 1;
      for (auto& f : fs) f = f.tau();
      PermutationBraid rest = delta.append_generator(l.gen.index);
      if (!rest.is_identity()) fs.push_back(rest);
    }
  }

  while (left_weight_sweep(fs)) {
  }
  std::erase_if(fs, [](const PermutationBraid& f) { return f.is_identity(); });
  std::size_t lead = 0;
  while (lead < fs.size() && fs[lead].is_half_twist()) ++lead;
  power += static_cast<int>(lead);
  fs.erase(fs.begin(), fs.begin() + static_cast<long>(lead));
  return GarsideNF{power, std::move(fs)};
}

bool artin_equal(const Word& u, const Word& v, int m) {
  if (u.strands() != v.strands())
    throw std::invalid_argument("cannot compare words with different strand counts");
  return left_normal_form(u, m) == left_normal_form(v, m);
}

Word b_generator(int i, int m) {
  if (i < 1 || i > m - 1) throw std::invalid_argument("band generator index out of range");
  Word w(m);
  for (int t = m - 1; t > i; --t) w = multiply(w, sigma_word(m, t));
  w = multiply(w, sigma_word(m, i, 2));
  for (int t = i + 1; t <= m - 1; ++t) w = multiply(w, sigma_word(m, t, -1));
  return w;
}

std::string format_nf(const GarsideNF& nf) {
  std::ostringstream os;
  os << "D^" << nf.halftwist_power;
  for (const auto& f : nf.factors) os << ' ' << f.str();
  return os.str();
}

}  // namespace rp2braid
