#pragma once

#include "wmgroups/errors.hpp"
#include "wmgroups/free_word.hpp"
#include "wmgroups/presentation.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace wm {

/// Column 2i is generator i + 1, column 2i + 1 its inverse.
inline std::uint32_t letter_column(const Letter& l) { return 2 * (l.gen - 1) + (l.exp > 0 ? 0 : 1); }
inline std::uint32_t inverse_column(std::uint32_t c) { return c ^ 1u; }

inline std::vector<std::uint32_t> word_columns(const FreeWord& w) {
  std::vector<std::uint32_t> cols;
  for (const Letter& l : w.letters()) cols.push_back(letter_column(l));
  return cols;
}

/// Complete coset table, cosets numbered 0.. in standard (breadth-first)
/// order with coset 0 the subgroup itself.
struct CosetTable {
  std::uint32_t columns = 0;
  std::vector<std::vector<std::uint32_t>> rows;

  std::size_t index() const { return rows.size(); }

  std::uint32_t act(std::uint32_t coset, const FreeWord& w) const {
    for (const Letter& l : w.letters()) coset = rows[coset][letter_column(l)];
    return coset;
  }

  friend bool operator==(const CosetTable&, const CosetTable&) = default;
  friend auto operator<=>(const CosetTable&, const CosetTable&) = default;
};

/// Checks closure (every entry defined and inverse columns consistent),
/// relator triviality from every coset, transitivity, and that the
/// subgroup generators fix coset 0.
inline std::optional<std::string> coset_table_violation(const CosetTable& t, const Presentation& p,
                                                        const std::vector<FreeWord>& subgroup = {}) {
  const std::size_t n = t.rows.size();
  if (n == 0) return "empty table";
  if (t.columns != 2 * p.rank()) return "column count does not match the presentation";
  for (std::size_t c = 0; c < n; ++c) {
    if (t.rows[c].size() != t.columns) return "ragged row " + std::to_string(c);
    for (std::uint32_t x = 0; x < t.columns; ++x) {
      const std::uint32_t d = t.rows[c][x];
      if (d >= n) return "undefined entry at coset " + std::to_string(c);
      if (t.rows[d][inverse_column(x)] != c) return "inverse columns disagree at coset " + std::to_string(c);
    }
  }
  for (const auto& r : p.relators)
    for (std::uint32_t c = 0; c < n; ++c)
      if (t.act(c, r) != c) return "relator " + r.to_string(p.generators) + " moves coset " + std::to_string(c);
  for (const auto& h : subgroup)
    if (t.act(0, h) != 0) return "subgroup generator " + h.to_string(p.generators) + " moves coset 0";
  std::vector<bool> seen(n);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::uint32_t c = queue.front();
    queue.pop_front();
    for (std::uint32_t d : t.rows[c])
      if (!seen[d]) {
        seen[d] = true;
        ++reached;
        queue.push_back(d);
      }
  }
  if (reached != n) return "action is not transitive";
  return std::nullopt;
}

/// The same action standardized from basepoint b, i.e. the table of the
/// stabilizer of coset b (a conjugate subgroup).
inline CosetTable rebase(const CosetTable& t, std::uint32_t b) {
  const auto none = UINT32_MAX;
  std::vector<std::uint32_t> number(t.rows.size(), none), order{b};
  number[b] = 0;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::uint32_t d : t.rows[order[k]])
      if (number[d] == none) {
        number[d] = static_cast<std::uint32_t>(order.size());
        order.push_back(d);
      }
  if (order.size() != t.rows.size()) throw PreconditionError("rebase needs a transitive table");
  CosetTable out;
  out.columns = t.columns;
  for (std::uint32_t c : order) {
    std::vector<std::uint32_t> row;
    for (std::uint32_t d : t.rows[c]) row.push_back(number[d]);
    out.rows.push_back(std::move(row));
  }
  return out;
}

struct EnumerationResult {
  std::optional<CosetTable> table;  // empty when the coset limit was exhausted
  std::size_t max_active = 0;
  std::size_t total_defined = 0;

  bool exhausted() const { return !table.has_value(); }
};

namespace detail {

/// Coset enumeration in the HLT style with lookahead.
class CosetEnumerator {
 public:
  static constexpr std::uint32_t none = UINT32_MAX;

  CosetEnumerator(const Presentation& p, const std::vector<FreeWord>& subgroup, std::size_t limit)
      : cols_(2 * p.rank()), limit_(limit) {
    for (const auto& r : p.relators)
      if (!r.empty()) relators_.push_back(word_columns(r));
    for (const auto& h : subgroup)
      if (!h.empty()) subgroup_.push_back(word_columns(h));
    new_row();
  }

  EnumerationResult run() {
    EnumerationResult res;
    for (const auto& h : subgroup_)
      if (!scan_and_fill(0, h)) return finish_exhausted(res);
    for (std::uint32_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      for (const auto& r : relators_) {
        if (!scan_and_fill(c, r)) return finish_exhausted(res);
        if (!alive(c)) break;
      }
      for (std::uint32_t x = 0; x < cols_ && alive(c); ++x)
        if (table_[c][x] == none && !define_with_lookahead(c, x)) return finish_exhausted(res);
    }
    res.table = standardize();
    res.max_active = max_active_;
    res.total_defined = table_.size();
    return res;
  }

 private:
  bool alive(std::uint32_t c) const { return parent_[c] == c; }

  void new_row() {
    table_.emplace_back(cols_, none);
    parent_.push_back(static_cast<std::uint32_t>(table_.size() - 1));
    ++active_;
    max_active_ = std::max(max_active_, active_);
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      const std::uint32_t next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  bool define_with_lookahead(std::uint32_t c, std::uint32_t x) {
    if (active_ >= limit_) {
      lookahead();
      if (active_ + std::max<std::size_t>(1, limit_ / 100) > limit_) return false;
      if (!alive(c) || table_[c][x] != none) return true;
    }
    const auto d = static_cast<std::uint32_t>(table_.size());
    new_row();
    table_[c][x] = d;
    table_[d][inverse_column(x)] = c;
    return true;
  }

  /// Scans every live coset under every relator without defining cosets.
  void lookahead() {
    for (std::uint32_t c = 0; c < table_.size(); ++c) {
      if (!alive(c)) continue;
      for (const auto& r : relators_) {
        scan(c, r);
        if (!alive(c)) break;
      }
    }
  }

  bool scan_and_fill(std::uint32_t c, const std::vector<std::uint32_t>& w) {
    for (;;) {
      if (!alive(c)) return true;
      const auto st = scan(c, w);
      if (st.complete) return true;
      if (!define_with_lookahead(st.f, w[st.i])) return false;
    }
  }

  struct ScanState {
    bool complete = false;
    std::uint32_t f = 0;
    std::size_t i = 0;
  };

  /// Scans w from c, closing a single gap by deduction and processing any
  /// coincidence; reports the first gap when more than one letter is missing.
  ScanState scan(std::uint32_t c, const std::vector<std::uint32_t>& w) {
    if (w.empty()) return {true};
    std::uint32_t f = c, b = c;
    std::size_t i = 0, j = w.size();
    while (i < j && table_[f][w[i]] != none) f = table_[f][w[i++]];
    if (i == j) {
      if (f != b) coincidence(f, b);
      return {true};
    }
    while (j > i && table_[b][inverse_column(w[j - 1])] != none) b = table_[b][inverse_column(w[--j])];
    if (j == i) {
      coincidence(f, b);
      return {true};
    }
    if (j == i + 1) {
      table_[f][w[i]] = b;
      table_[b][inverse_column(w[i])] = f;
      return {true};
    }
    return {false, f, i};
  }

  void merge(std::uint32_t a, std::uint32_t b, std::deque<std::uint32_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --active_;
    queue.push_back(b);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    std::deque<std::uint32_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::uint32_t e = queue.front();
      queue.pop_front();
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const std::uint32_t f = table_[e][x];
        if (f == none) continue;
        const std::uint32_t xi = inverse_column(x);
        if (table_[f][xi] == e) table_[f][xi] = none;
        const std::uint32_t e1 = rep(e), f1 = rep(f);
        if (table_[e1][x] != none)
          merge(f1, table_[e1][x], queue);
        else if (table_[f1][xi] != none)
          merge(e1, table_[f1][xi], queue);
        else {
          table_[e1][x] = f1;
          table_[f1][xi] = e1;
        }
      }
    }
  }

  EnumerationResult finish_exhausted(EnumerationResult& res) {
    res.max_active = max_active_;
    res.total_defined = table_.size();
    return res;
  }

  CosetTable standardize() {
    std::vector<std::uint32_t> number(table_.size(), none);
    std::vector<std::uint32_t> order{rep(0)};
    number[order[0]] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const std::uint32_t d = rep(table_[order[k]][x]);
        if (number[d] == none) {
          number[d] = static_cast<std::uint32_t>(order.size());
          order.push_back(d);
        }
      }
    CosetTable t;
    t.columns = cols_;
    for (std::uint32_t c : order) {
      std::vector<std::uint32_t> row(cols_);
      for (std::uint32_t x = 0; x < cols_; ++x) row[x] = number[rep(table_[c][x])];
      t.rows.push_back(std::move(row));
    }
    return t;
  }

  std::uint32_t cols_;
  std::size_t limit_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::vector<std::uint32_t>> subgroup_;
  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::uint32_t> parent_;
  std::size_t active_ = 0;
  std::size_t max_active_ = 0;
};

}  // namespace detail

inline constexpr std::size_t default_coset_limit = 100000;

/// Enumerates the cosets of the subgroup generated by `subgroup`. Returns an
/// exhausted result once more than `limit` cosets would be live at once.
inline EnumerationResult todd_coxeter(const Presentation& p, const std::vector<FreeWord>& subgroup = {},
                                      std::size_t limit = default_coset_limit) {
  if (limit < 1) throw PreconditionError("coset limit must be at least 1");
  if (p.generators.empty()) throw PreconditionError("presentation has no generators");
  for (const auto& w : subgroup)
    if (w.max_generator() > p.rank()) throw PreconditionError("subgroup word uses an unknown generator");
  return detail::CosetEnumerator(p, subgroup, limit).run();
}

struct LowIndexSubgroup {
  CosetTable table;
  std::size_t conjugates = 1;  // size of the conjugacy class
};

struct LowIndexResult {
  std::vector<LowIndexSubgroup> subgroups;  // sorted by index, then table
  bool partial = false;
  std::uint64_t nodes = 0;
};

namespace detail {

/// Backtracking over partial coset tables with at most k rows.
class LowIndexSearch {
 public:
  static constexpr std::uint32_t none = UINT32_MAX;

  LowIndexSearch(const Presentation& p, std::uint32_t k, std::uint64_t node_budget)
      : cols_(2 * p.rank()), k_(k), budget_(node_budget) {
    for (const auto& r : p.relators)
      if (!r.empty()) relators_.push_back(word_columns(r));
  }

  LowIndexResult run() {
    std::vector<std::vector<std::uint32_t>> t(1, std::vector<std::uint32_t>(cols_, none));
    search(t);
    std::sort(result_.subgroups.begin(), result_.subgroups.end(),
              [](const auto& a, const auto& b) {
                if (a.table.index() != b.table.index()) return a.table.index() < b.table.index();
                return a.table < b.table;
              });
    return result_;
  }

 private:
  using Table = std::vector<std::vector<std::uint32_t>>;

  void search(Table& t) {
    if (++result_.nodes > budget_) {
      result_.partial = true;
      return;
    }
    if (!propagate(t) || !canonical(t)) return;
    std::uint32_t c = 0, x = 0;
    if (!first_gap(t, c, x)) {
      if (t.size() >= 2) record(t);
      return;
    }
    const std::uint32_t xi = inverse_column(x);
    for (std::uint32_t d = 0; d < t.size(); ++d) {
      if (t[d][xi] != none) continue;
      Table next = t;
      next[c][x] = d;
      next[d][xi] = c;
      search(next);
      if (result_.partial) return;
    }
    if (t.size() < k_) {
      Table next = t;
      const auto d = static_cast<std::uint32_t>(next.size());
      next.emplace_back(cols_, none);
      next[c][x] = d;
      next[d][xi] = c;
      search(next);
    }
  }

  bool first_gap(const Table& t, std::uint32_t& c, std::uint32_t& x) const {
    for (c = 0; c < t.size(); ++c)
      for (x = 0; x < cols_; ++x)
        if (t[c][x] == none) return true;
    return false;
  }

  /// Applies relator deductions until stable; false on a contradiction.
  bool propagate(Table& t) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::uint32_t c = 0; c < t.size(); ++c)
        for (const auto& w : relators_) {
          std::uint32_t f = c, b = c;
          std::size_t i = 0, j = w.size();
          while (i < j && t[f][w[i]] != none) f = t[f][w[i++]];
          if (i == j) {
            if (f != c) return false;
            continue;
          }
          while (j > i && t[b][inverse_column(w[j - 1])] != none) b = t[b][inverse_column(w[--j])];
          if (j == i) return false;
          if (j == i + 1) {
            if (t[b][inverse_column(w[i])] != none) return false;
            t[f][w[i]] = b;
            t[b][inverse_column(w[i])] = f;
            changed = true;
          }
        }
    }
    return true;
  }

  enum class Cmp { Smaller, Same, Larger, Unknown };

  /// Compares the table renumbered from basepoint b with t, entry by entry
  /// in standard order.
  Cmp compare_from(const Table& t, std::uint32_t b) const {
    std::vector<std::uint32_t> number(t.size(), none), order{b};
    number[b] = 0;
    for (std::uint32_t row = 0; row < t.size(); ++row) {
      if (row >= order.size()) return Cmp::Unknown;
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const std::uint32_t orig = t[row][x];
        const std::uint32_t img = t[order[row]][x];
        if (orig == none || img == none) return Cmp::Unknown;
        if (number[img] == none) {
          number[img] = static_cast<std::uint32_t>(order.size());
          order.push_back(img);
        }
        if (number[img] < orig) return Cmp::Smaller;
        if (number[img] > orig) return Cmp::Larger;
      }
    }
    return Cmp::Same;
  }

  bool canonical(const Table& t) const {
    for (std::uint32_t b = 1; b < t.size(); ++b)
      if (compare_from(t, b) == Cmp::Smaller) return false;
    return true;
  }

  void record(const Table& t) {
    LowIndexSubgroup s;
    s.table.columns = cols_;
    s.table.rows = t;
    std::size_t normalizer = 1;
    for (std::uint32_t b = 1; b < t.size(); ++b)
      if (compare_from(t, b) == Cmp::Same) ++normalizer;
    s.conjugates = t.size() / normalizer;
    result_.subgroups.push_back(std::move(s));
  }

  std::uint32_t cols_;
  std::uint32_t k_;
  std::uint64_t budget_;
  std::vector<std::vector<std::uint32_t>> relators_;
  LowIndexResult result_;
};

}  // namespace detail

inline constexpr std::uint64_t default_low_index_budget = 50000000;

/// One representative per conjugacy class of subgroups of index 2..k.
inline LowIndexResult low_index_subgroups(const Presentation& p, std::uint32_t k,
                                          std::uint64_t node_budget = default_low_index_budget) {
  if (k < 2) throw PreconditionError("maximal index must be at least 2");
  if (p.generators.empty()) throw PreconditionError("presentation has no generators");
  return detail::LowIndexSearch(p, k, node_budget).run();
}

/// Generators of the subgroup fixing coset 0 (Schreier generators over the
/// breadth-first spanning tree of the table).
inline std::vector<FreeWord> subgroup_generators(const CosetTable& t) {
  const std::size_t n = t.rows.size();
  std::vector<std::optional<FreeWord>> rep(n);
  rep[0] = FreeWord();
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(t.columns));
  std::deque<std::uint32_t> queue{0};
  while (!queue.empty()) {
    const std::uint32_t c = queue.front();
    queue.pop_front();
    for (std::uint32_t x = 0; x < t.columns; ++x) {
      const std::uint32_t d = t.rows[c][x];
      if (rep[d]) continue;
      rep[d] = *rep[c] * FreeWord::generator(x / 2 + 1, x % 2 ? -1 : 1);
      tree[c][x] = true;
      tree[d][inverse_column(x)] = true;
      queue.push_back(d);
    }
  }
  std::vector<FreeWord> gens;
  for (std::uint32_t c = 0; c < n; ++c)
    for (std::uint32_t x = 0; x < t.columns; x += 2) {
      if (tree[c][x]) continue;
      FreeWord s = *rep[c] * FreeWord::generator(x / 2 + 1) * rep[t.rows[c][x]]->inverse();
      if (!s.empty() && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(std::move(s));
    }
  return gens;
}

}  // namespace wm
