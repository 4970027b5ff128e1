#include "rp2braid/presentation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace rp2braid {

Presentation::Presentation(int strands_, std::vector<Word> relators_)
    : strands(strands_), relators(std::move(relators_)) {
  if (strands < 1) throw std::invalid_argument("strand count must be positive");
  for (int i = 1; i <= strands - 1; ++i) generators.push_back({GenKind::Sigma, i});
  for (int j = 1; j <= strands; ++j) generators.push_back({GenKind::Rho, j});
  for (Word& r : relators) {
    if (r.strands() != strands)
      throw std::invalid_argument("relator strand count does not match presentation");
    r = freely_reduce(r);
  }
}

Presentation van_buskirk_presentation(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<Word> rels;
  // R1
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j)
      rels.push_back(multiply(multiply(sigma_word(n, i), sigma_word(n, j)),
                              multiply(sigma_word(n, i, -1), sigma_word(n, j, -1))));
  // R2
  for (int i = 1; i <= n - 2; ++i) {
    Word w = multiply(multiply(sigma_word(n, i), sigma_word(n, i + 1)), sigma_word(n, i));
    w = multiply(w, multiply(multiply(sigma_word(n, i + 1, -1), sigma_word(n, i, -1)),
                             sigma_word(n, i + 1, -1)));
    rels.push_back(w);
  }
  // R3
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n; ++j) {
      if (j == i || j == i + 1) continue;
      rels.push_back(multiply(multiply(sigma_word(n, i), rho_word(n, j)),
                              multiply(sigma_word(n, i, -1), rho_word(n, j, -1))));
    }
  // R4
  for (int i = 1; i <= n - 1; ++i)
    rels.push_back(multiply(multiply(rho_word(n, i + 1), sigma_word(n, i)),
                            multiply(rho_word(n, i, -1), sigma_word(n, i))));
  // R5; the sigma tail is empty when n = 1
  {
    Word w = rho_word(n, n, 2);
    for (int i = n - 1; i >= 2; --i) w = multiply(w, sigma_word(n, i));
    if (n >= 2) w = multiply(w, sigma_word(n, 1, 2));
    for (int i = 2; i <= n - 1; ++i) w = multiply(w, sigma_word(n, i));
    rels.push_back(w);
  }
  // R6
  for (int i = 1; i <= n - 1; ++i) {
    Word w = multiply(rho_word(n, i + 1, -1), rho_word(n, i, -1));
    w = multiply(w, multiply(rho_word(n, i + 1), rho_word(n, i)));
    w = multiply(w, sigma_word(n, i, -2));
    rels.push_back(w);
  }
  return Presentation(n, std::move(rels));
}

namespace {

// Inserts `ins` at `pos` and freely reduces. Assumes 0 <= pos <= |w|.
Word insert_and_reduce(const Word& w, std::size_t pos, const Word& ins) {
  std::vector<Letter> ls;
  ls.reserve(w.length() + ins.length());
  ls.insert(ls.end(), w.letters().begin(), w.letters().begin() + static_cast<long>(pos));
  ls.insert(ls.end(), ins.letters().begin(), ins.letters().end());
  ls.insert(ls.end(), w.letters().begin() + static_cast<long>(pos), w.letters().end());
  return freely_reduce(Word(w.strands(), std::move(ls)));
}

// Literal deletion: the relator letters must appear verbatim at pos.
std::optional<Word> delete_and_reduce(const Word& w, std::size_t pos, const Word& rel) {
  if (pos + rel.length() > w.length()) return std::nullopt;
  for (std::size_t i = 0; i < rel.length(); ++i)
    if (!(w.letters()[pos + i] == rel.letters()[i])) return std::nullopt;
  std::vector<Letter> ls;
  ls.reserve(w.length() - rel.length());
  ls.insert(ls.end(), w.letters().begin(), w.letters().begin() + static_cast<long>(pos));
  ls.insert(ls.end(), w.letters().begin() + static_cast<long>(pos + rel.length()),
            w.letters().end());
  return freely_reduce(Word(w.strands(), std::move(ls)));
}

}  // namespace

bool check_trace(const Presentation& p, const ProofTrace& t) {
  if (t.start.strands() != p.strands || t.end.strands() != p.strands) return false;
  Word cur = freely_reduce(t.start);
  for (const TraceStep& s : t.steps) {
    if (s.relator < 0 || s.relator >= static_cast<int>(p.relators.size())) return false;
    Word rel = p.relators[static_cast<std::size_t>(s.relator)];
    if (s.use_inverse) rel = invert(rel);
    if (s.deletion) {
      auto next = delete_and_reduce(cur, s.position, rel);
      if (!next) return false;
      cur = *next;
    } else {
      if (s.position > cur.length()) return false;
      cur = insert_and_reduce(cur, s.position, rel);
    }
  }
  return cur == freely_reduce(t.end);
}

ProveResult prove_equal(const Presentation& p, const Word& u, const Word& v,
                        const SearchBudget& budget) {
  if (u.strands() != p.strands || v.strands() != p.strands)
    throw std::invalid_argument("words do not match the presentation's strand count");
  Word start = multiply(u, invert(v));
  ProveResult res;
  if (start.empty()) {
    res.trace = ProofTrace{start, {}, Word(p.strands)};
    return res;
  }

  // Relator edits in canonical order: relator index ascending, plain before
  // inverse. Paired with position ascending this makes BFS discovery order
  // the lexicographic order on edit sequences of equal length.
  std::vector<std::pair<Word, TraceStep>> edits;
  for (int t = 0; t < static_cast<int>(p.relators.size()); ++t) {
    const Word& r = p.relators[static_cast<std::size_t>(t)];
    if (r.empty()) continue;
    edits.emplace_back(r, TraceStep{0, t, false, false});
    edits.emplace_back(invert(r), TraceStep{0, t, true, false});
  }

  struct Node {
    Word word;
    std::int64_t parent;
    TraceStep step;
    int depth;
  };

  for (int slack = 0; slack <= budget.max_slack; ++slack) {
    ++res.stats.corridors_tried;
    std::size_t cap = start.length() + static_cast<std::size_t>(slack);
    std::vector<Node> arena;
    std::unordered_map<std::string, std::int64_t> seen;
    arena.push_back({start, -1, TraceStep{}, 0});
    seen.emplace(start.packed_key(), 0);
    std::deque<std::int64_t> queue{0};
    std::int64_t found = -1;

    while (!queue.empty() && found < 0) {
      std::int64_t cur = queue.front();
      queue.pop_front();
      if (arena[static_cast<std::size_t>(cur)].depth >= budget.max_edits) continue;
      const Word w = arena[static_cast<std::size_t>(cur)].word;
      const int depth = arena[static_cast<std::size_t>(cur)].depth;
      for (std::size_t pos = 0; pos <= w.length() && found < 0; ++pos) {
        for (const auto& [rel, step] : edits) {
          Word next = insert_and_reduce(w, pos, rel);
          if (next.length() > cap) continue;
          std::string key = next.packed_key();
          if (seen.count(key)) continue;
          ++res.stats.states_visited;
          TraceStep st = step;
          st.position = pos;
          arena.push_back({next, cur, st, depth + 1});
          seen.emplace(std::move(key), static_cast<std::int64_t>(arena.size()) - 1);
          if (next.empty()) {
            found = static_cast<std::int64_t>(arena.size()) - 1;
            break;
          }
          if (res.stats.states_visited >= budget.max_states) {
            res.stats.budget_exhausted = true;
            return res;
          }
          queue.push_back(static_cast<std::int64_t>(arena.size()) - 1);
        }
      }
    }

    if (found >= 0) {
      std::vector<TraceStep> steps;
      for (std::int64_t at = found; at > 0; at = arena[static_cast<std::size_t>(at)].parent)
        steps.push_back(arena[static_cast<std::size_t>(at)].step);
      std::reverse(steps.begin(), steps.end());
      res.trace = ProofTrace{start, std::move(steps), Word(p.strands)};
      return res;
    }
  }
  res.stats.budget_exhausted = true;
  return res;
}

Presentation parse_presentation(std::istream& in) {
  std::string line;
  int strands = 0;
  std::vector<std::pair<std::string, std::string>> rel_texts;
  std::vector<Word> rels;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    std::string rest;
    std::getline(ls, rest);
    if (keyword == "strands:") {
      strands = std::stoi(rest);
    } else if (keyword == "rel:") {
      if (strands < 1) throw std::invalid_argument("'rel:' before 'strands:' line");
      rels.push_back(parse_word(strands, rest));
    } else {
      throw std::invalid_argument("unknown presentation line '" + keyword + "'");
    }
  }
  if (strands < 1) throw std::invalid_argument("presentation file lacks a 'strands:' line");
  return Presentation(strands, std::move(rels));
}

Presentation parse_presentation_text(const std::string& text) {
  std::istringstream is(text);
  return parse_presentation(is);
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "strands: " << p.strands << '\n';
  for (const Word& r : p.relators) os << "rel: " << format_word(r) << '\n';
  return os.str();
}

}  // namespace rp2braid
