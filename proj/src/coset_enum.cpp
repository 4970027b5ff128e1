#include "rp2braid/coset_enum.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "rp2braid/artin.hpp"

namespace rp2braid {

namespace {

// Working state of one enumeration, Holt's HLT formulation. Cosets are
// 1-based; entry 0 means undefined. Column 2t is generator t, 2t+1 its
// inverse.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgens, std::int64_t max_cosets)
      : pres_(p), subgens_(subgens), ncols_(2 * static_cast<int>(p.generators.size())),
        max_cosets_(max_cosets) {
    for (std::size_t t = 0; t < p.generators.size(); ++t)
      gen_col_[p.generators[t]] = 2 * static_cast<int>(t);
    for (const Word& r : p.relators) rel_cols_.push_back(word_cols(r));
    for (const Word& w : subgens_) sub_cols_.push_back(word_cols(w));
    table_.assign(static_cast<std::size_t>(ncols_), 0);  // dummy row 0
  }

  bool run() {
    new_coset(0, -1);  // coset 1
    for (const auto& cols : sub_cols_) {
      scan_and_fill(1, cols);
      if (overflow_) return false;
    }
    for (int c = 1; c <= ncosets_; ++c) {
      if (rep(c) != c) continue;
      for (const auto& cols : rel_cols_) {
        if (rep(c) != c) break;
        scan_and_fill(c, cols);
        if (overflow_) return false;
      }
      if (rep(c) != c) continue;
      for (int x = 0; x < ncols_; ++x) {
        if (entry(c, x) == 0) {
          int d = new_coset(c, x);
          if (overflow_) return false;
          set(c, x, d);
          set(d, inv(x), c);
        }
      }
    }
    return true;
  }

  CosetTable freeze(CosetTable::Status status) {
    std::vector<int> remap(static_cast<std::size_t>(ncosets_) + 1, 0);
    int live = 0;
    for (int c = 1; c <= ncosets_; ++c)
      if (rep(c) == c) remap[static_cast<std::size_t>(c)] = ++live;
    std::vector<int> rows;
    std::vector<Word> reps;
    if (status == CosetTable::Status::Complete) {
      rows.assign(static_cast<std::size_t>(live + 1) * static_cast<std::size_t>(ncols_), 0);
      reps.assign(static_cast<std::size_t>(live) + 1, Word(pres_.strands));
      for (int c = 1; c <= ncosets_; ++c) {
        int rc = remap[static_cast<std::size_t>(c)];
        if (!rc) continue;
        for (int x = 0; x < ncols_; ++x) {
          int d = entry(c, x);
          rows[static_cast<std::size_t>(rc) * static_cast<std::size_t>(ncols_) +
               static_cast<std::size_t>(x)] = d ? remap[static_cast<std::size_t>(rep(d))] : 0;
        }
        reps[static_cast<std::size_t>(rc)] = rep_word_of(c);
      }
    }
    return CosetTable(pres_, subgens_, status, ncols_, std::move(rows), std::move(reps), defined_);
  }

 private:
  static int inv(int col) { return col ^ 1; }

  std::vector<int> word_cols(const Word& w) const {
    std::vector<int> cols;
    cols.reserve(w.length());
    for (const Letter& l : w.letters()) {
      int base = gen_col_.at(l.gen);
      cols.push_back(l.exp > 0 ? base : base + 1);
    }
    return cols;
  }

  int entry(int c, int x) const {
    return table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(ncols_) +
                  static_cast<std::size_t>(x)];
  }
  void set(int c, int x, int d) {
    table_[static_cast<std::size_t>(c) * static_cast<std::size_t>(ncols_) +
           static_cast<std::size_t>(x)] = d;
  }

  int new_coset(int parent, int via_col) {
    ++ncosets_;
    table_.insert(table_.end(), static_cast<std::size_t>(ncols_), 0);
    parent_.push_back({parent, via_col});
    p_.push_back(ncosets_);
    ++defined_;
    if (static_cast<std::int64_t>(ncosets_) > max_cosets_) overflow_ = true;
    return ncosets_;
  }

  int rep(int c) {
    int root = c;
    while (p_[static_cast<std::size_t>(root)] != root) root = p_[static_cast<std::size_t>(root)];
    while (p_[static_cast<std::size_t>(c)] != root) {
      int next = p_[static_cast<std::size_t>(c)];
      p_[static_cast<std::size_t>(c)] = root;
      c = next;
    }
    return root;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[static_cast<std::size_t>(b)] = a;
    queue_.push_back(b);
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!queue_.empty()) {
      int e = queue_.front();
      queue_.pop_front();
      for (int x = 0; x < ncols_; ++x) {
        int f = entry(e, x);
        if (!f) continue;
        if (entry(f, inv(x)) == e) set(f, inv(x), 0);
        int e1 = rep(e), f1 = rep(f);
        if (int g = entry(e1, x); g) {
          merge(f1, g);
        } else if (int h = entry(f1, inv(x)); h) {
          merge(e1, h);
        } else {
          set(e1, x, f1);
          set(f1, inv(x), e1);
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& cols) {
    if (cols.empty()) return;
    int f = c;
    std::size_t i = 0;
    int b = c;
    std::size_t j = cols.size();  // one past the backward scan position
    while (true) {
      while (i < j && entry(f, cols[i]) != 0) f = entry(f, cols[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, inv(cols[j - 1])) != 0) b = entry(b, inv(cols[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, cols[i], b);
        set(b, inv(cols[i]), f);
        return;
      }
      int d = new_coset(f, cols[i]);
      if (overflow_) return;
      set(f, cols[i], d);
      set(d, inv(cols[i]), f);
      f = d;
      ++i;
    }
  }

  Word rep_word_of(int c) const {
    // The definition tree stays valid through coincidences: tracing the
    // definition word in the final table lands on the merged representative.
    std::vector<Letter> ls;
    int at = c;
    while (parent_[static_cast<std::size_t>(at)].first != 0) {
      auto [par, col] = parent_[static_cast<std::size_t>(at)];
      const Generator g = pres_.generators[static_cast<std::size_t>(col / 2)];
      ls.push_back({g, col % 2 == 0 ? 1 : -1});
      at = par;
    }
    std::reverse(ls.begin(), ls.end());
    return Word(pres_.strands, std::move(ls));
  }

  Presentation pres_;
  std::vector<Word> subgens_;
  int ncols_;
  std::int64_t max_cosets_;
  std::map<Generator, int> gen_col_;
  std::vector<std::vector<int>> rel_cols_, sub_cols_;
  std::vector<int> table_;  // flat rows, row 0 unused
  std::vector<std::pair<int, int>> parent_{{0, -1}};
  std::vector<int> p_{0};
  std::deque<int> queue_;
  int ncosets_ = 0;
  std::int64_t defined_ = 0;
  bool overflow_ = false;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgens,
                        std::int64_t max_cosets) {
  for (const Word& w : subgens)
    if (w.strands() != p.strands)
      throw std::invalid_argument("subgroup generator strand count mismatch");
  Enumerator e(p, subgens, max_cosets);
  bool ok = e.run();
  return e.freeze(ok ? CosetTable::Status::Complete : CosetTable::Status::Overflow);
}

CosetTable::CosetTable(Presentation p, std::vector<Word> subgens, Status status, int ncols,
                       std::vector<int> rows, std::vector<Word> rep_words,
                       std::int64_t cosets_defined)
    : presentation_(std::move(p)), subgens_(std::move(subgens)), status_(status), ncols_(ncols),
      rows_(std::move(rows)), rep_words_(std::move(rep_words)), cosets_defined_(cosets_defined) {}

int CosetTable::index() const {
  if (!complete()) throw std::logic_error("index of an incomplete table");
  return static_cast<int>(rows_.size() / static_cast<std::size_t>(ncols_)) - 1;
}

int CosetTable::entry(int coset, int col) const {
  if (!complete()) throw std::logic_error("entries of an incomplete table");
  return rows_[static_cast<std::size_t>(coset) * static_cast<std::size_t>(ncols_) +
               static_cast<std::size_t>(col)];
}

int CosetTable::column_of(const Letter& l) const {
  for (std::size_t t = 0; t < presentation_.generators.size(); ++t)
    if (presentation_.generators[t] == l.gen)
      return 2 * static_cast<int>(t) + (l.exp > 0 ? 0 : 1);
  throw std::invalid_argument("letter outside the presentation's generators");
}

int CosetTable::trace(int coset, const Word& w) const {
  int c = coset;
  for (const Letter& l : w.letters()) {
    c = entry(c, column_of(l));
    if (!c) throw std::logic_error("trace hit an undefined entry");
  }
  return c;
}

const Word& CosetTable::rep_word(int coset) const {
  return rep_words_[static_cast<std::size_t>(coset)];
}

bool CosetTable::verify() const {
  if (!complete()) return false;
  int n = index();
  for (int c = 1; c <= n; ++c)
    for (int x = 0; x < ncols_; ++x) {
      int d = entry(c, x);
      if (d < 1 || d > n) return false;
      if (entry(d, x ^ 1) != c) return false;
    }
  for (const Word& w : subgens_)
    if (trace(1, w) != 1) return false;
  for (const Word& r : presentation_.relators)
    for (int c = 1; c <= n; ++c)
      if (trace(c, r) != c) return false;
  for (int c = 1; c <= n; ++c)
    if (trace(1, rep_words_[static_cast<std::size_t>(c)]) != c) return false;
  return true;
}

CayleyTable::CayleyTable(const CosetTable& table) {
  if (!table.complete()) throw std::invalid_argument("Cayley table needs a complete enumeration");
  if (!table.subgroup_generators().empty())
    throw std::invalid_argument("Cayley table needs a trivial-subgroup enumeration");
  order_ = table.index();
  rep_words_.reserve(static_cast<std::size_t>(order_) + 1);
  for (int c = 0; c <= order_; ++c)
    rep_words_.push_back(c == 0 ? Word(table.presentation().strands) : table.rep_word(c));
  mult_.assign(static_cast<std::size_t>(order_ + 1) * static_cast<std::size_t>(order_ + 1), 0);
  for (int a = 1; a <= order_; ++a)
    for (int b = 1; b <= order_; ++b)
      mult_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_ + 1) +
            static_cast<std::size_t>(b)] = table.trace(a, rep_words_[static_cast<std::size_t>(b)]);
}

int CayleyTable::multiply(int a, int b) const {
  return mult_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_ + 1) +
               static_cast<std::size_t>(b)];
}

int CayleyTable::inverse(int a) const {
  for (int b = 1; b <= order_; ++b)
    if (multiply(a, b) == 1) return b;
  throw std::logic_error("element without inverse");
}

int CayleyTable::element_order(int a) const {
  int e = 1, acc = a;
  while (acc != 1) {
    acc = multiply(acc, a);
    ++e;
  }
  return e;
}

GroupProfile CayleyTable::profile() const {
  std::vector<int> all(static_cast<std::size_t>(order_));
  std::iota(all.begin(), all.end(), 1);
  return profile_of(all);
}

GroupProfile CayleyTable::profile_of(const std::vector<int>& elements) const {
  std::vector<bool> in(static_cast<std::size_t>(order_) + 1, false);
  for (int e : elements) in[static_cast<std::size_t>(e)] = true;
  for (int a : elements)
    for (int b : elements)
      if (!in[static_cast<std::size_t>(multiply(a, b))])
        throw std::invalid_argument("subset is not closed under multiplication");
  GroupProfile prof;
  prof.order = static_cast<int>(elements.size());
  for (int a : elements) ++prof.order_histogram[element_order(a)];
  for (int a : elements) {
    bool central = true;
    for (int b : elements)
      if (multiply(a, b) != multiply(b, a)) {
        central = false;
        break;
      }
    if (central) ++prof.center_size;
  }
  auto it = prof.order_histogram.find(2);
  prof.unique_involution = it != prof.order_histogram.end() && it->second == 1;
  return prof;
}

std::vector<int> CayleyTable::pure_elements() const {
  std::vector<int> out;
  for (int a = 1; a <= order_; ++a)
    if (permutation_of(rep_words_[static_cast<std::size_t>(a)]).is_identity()) out.push_back(a);
  return out;
}

CayleyTable cayley_from(const CosetTable& table) { return CayleyTable(table); }

int element_order_in(const CosetTable& table, const Word& w) {
  if (!table.complete() || !table.subgroup_generators().empty())
    throw std::invalid_argument("element order needs a complete trivial-subgroup table");
  int e = 1, acc = table.trace(1, w);
  while (acc != 1) {
    acc = table.trace(acc, w);
    ++e;
  }
  return e;
}

std::string GroupName::str() const {
  switch (kind) {
    case GroupNameKind::Z1: return "Z1";
    case GroupNameKind::Z2: return "Z2";
    case GroupNameKind::Z4: return "Z4";
    case GroupNameKind::Q8: return "Q8";
    case GroupNameKind::Q16: return "Q16";
    case GroupNameKind::Sym: return "S" + std::to_string(sym_degree);
    case GroupNameKind::Other: return "other";
  }
  return "other";
}

GroupName identify_group(const GroupProfile& p) {
  const auto& h = p.order_histogram;
  auto hist_is = [&](std::map<int, int> want) { return h == want; };
  if (p.order == 1) return {GroupNameKind::Z1, 0};
  if (p.order == 2) return {GroupNameKind::Z2, 0};
  if (p.order == 4 && hist_is({{1, 1}, {2, 1}, {4, 2}})) return {GroupNameKind::Z4, 0};
  if (p.order == 6 && hist_is({{1, 1}, {2, 3}, {3, 2}})) return {GroupNameKind::Sym, 3};
  if (p.order == 8 && hist_is({{1, 1}, {2, 1}, {4, 6}})) return {GroupNameKind::Q8, 0};
  if (p.order == 16 && hist_is({{1, 1}, {2, 1}, {4, 10}, {8, 4}})) return {GroupNameKind::Q16, 0};
  if (p.order == 24 && hist_is({{1, 1}, {2, 9}, {3, 8}, {4, 6}})) return {GroupNameKind::Sym, 4};
  return {GroupNameKind::Other, 0};
}

std::vector<Word> pure_subgroup_generators(int n) {
  std::vector<Word> gens;
  for (int j = 1; j <= n; ++j) gens.push_back(rho_word(n, j));
  for (int m = 2; m <= n; ++m)
    for (int i = 1; i <= m - 1; ++i) {
      // the m-strand band generator included into n strands: same letters
      Word bm = b_generator(i, m);
      std::vector<Letter> ls = bm.letters();
      gens.push_back(Word(n, std::move(ls)));
    }
  return gens;
}

}  // namespace rp2braid
