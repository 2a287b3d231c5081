#include "etaforge/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace etaforge {

int TypedTableau::n_stat() const {
  int n = 0;
  for (size_t i = 1; i < chain.size(); ++i) n += strip_stats(chain[i], chain[i - 1]).n_typed;
  return n;
}

std::vector<int> TypedTableau::entry_counts() const {
  std::vector<int> out;
  for (size_t i = 1; i < chain.size(); ++i)
    out.push_back(static_cast<int>(chain[i].size() - chain[i - 1].size()));
  return out;
}

std::vector<int> TypedBitableau::mark_counts(int k) const {
  std::vector<int> out(k, 0);
  for (const auto& row : marked)
    for (int v : row) {
      hard_assert(v >= 1 && v <= k, "marked entry out of range");
      ++out[v - 1];
    }
  return out;
}

std::vector<TypedTableau> enumerate_typed_tableaux(const TypedPartition& la,
                                                   const TypedPartition& mu, int max_entry) {
  std::vector<TypedTableau> out;
  if (!la.shape.contains(mu.shape) || la.k != mu.k) return out;
  TypedTableau cur;
  cur.chain.push_back(mu);
  std::function<void(int)> go = [&](int entries_left) {
    TypedPartition top = cur.chain.back();  // copy: the chain reallocates below
    if (entries_left == 0) {
      if (top == la) out.push_back(cur);
      return;
    }
    for (long long s = top.size(); s <= la.size(); ++s)
      for (const auto& strip : typed_strips_above(top, la.shape, s)) {
        if (entries_left == 1 && !(strip.mu == la)) continue;
        cur.chain.push_back(strip.mu);
        go(entries_left - 1);
        cur.chain.pop_back();
      }
  };
  go(max_entry);
  return out;
}

std::vector<TypedTableau> enumerate_standard(const TypedPartition& la,
                                             const TypedPartition& mu) {
  std::vector<TypedTableau> out;
  if (!la.shape.contains(mu.shape) || la.k != mu.k) return out;
  TypedTableau cur;
  cur.chain.push_back(mu);
  std::function<void()> go = [&]() {
    TypedPartition top = cur.chain.back();  // copy: the chain reallocates below
    if (top.size() == la.size()) {
      if (top == la) out.push_back(cur);
      return;
    }
    for (const auto& strip : typed_strips_above(top, la.shape, top.size() + 1)) {
      cur.chain.push_back(strip.mu);
      go();
      cur.chain.pop_back();
    }
  };
  go();
  return out;
}

namespace {

// Marked fillings of the inner shape: values 1..k, strictly increasing along
// rows, weakly increasing down columns.  Row r is filled as a whole.
void marked_fillings(const Partition& mu, int k, std::vector<std::vector<int>>& cur,
                     std::vector<std::vector<std::vector<int>>>& out) {
  int r = static_cast<int>(cur.size());
  if (r == mu.length()) {
    out.push_back(cur);
    return;
  }
  int width = mu.part(r + 1);
  std::vector<int> row(width, 0);
  std::function<void(int)> fill = [&](int c) {
    if (c == width) {
      cur.push_back(row);
      marked_fillings(mu, k, cur, out);
      cur.pop_back();
      return;
    }
    int lo = (c > 0) ? row[c - 1] + 1 : 1;                      // strict along the row
    if (r > 0 && c < static_cast<int>(cur[r - 1].size())) lo = std::max(lo, cur[r - 1][c]);
    for (int v = lo; v <= k; ++v) {
      row[c] = v;
      fill(c + 1);
    }
  };
  fill(0);
}

}  // namespace

std::vector<TypedBitableau> enumerate_bitableaux(const TypedPartition& la, int max_unmarked) {
  std::vector<TypedBitableau> out;
  int k = la.k;
  for (long long s = 0; s <= la.size(); ++s)
    for (const auto& shape : k_strict_between(Partition(), la.shape, s, k)) {
      if (shape.part(1) > k) continue;
      for (const auto& mu : typed_versions(shape, k)) {
        if (mu.type == 2) continue;
        std::vector<std::vector<std::vector<int>>> fillings;
        std::vector<std::vector<int>> cur;
        marked_fillings(shape, k, cur, fillings);
        if (fillings.empty()) continue;
        auto tabs = enumerate_typed_tableaux(la, mu, max_unmarked);
        for (const auto& f : fillings)
          for (const auto& t : tabs) out.push_back(TypedBitableau{f, t});
      }
    }
  return out;
}

SparsePoly e_skew(const TypedPartition& la, const TypedPartition& mu, Workspace& ws) {
  hard_assert(la.k == mu.k, "e_skew needs matching k");
  if (!la.shape.contains(mu.shape)) return ws.zero();
  std::function<SparsePoly(const TypedPartition&, int)> rec =
      [&](const TypedPartition& top, int entries) -> SparsePoly {
    if (entries == 0) return (top == mu) ? ws.one() : ws.zero();
    auto key = std::make_tuple(top, mu, entries);
    auto it = ws.eskew_memo.find(key);
    if (it != ws.eskew_memo.end()) return it->second;
    SparsePoly acc = ws.zero();
    for (long long s = mu.size(); s <= top.size(); ++s)
      for (const auto& strip : typed_strips_below(top, s)) {
        if (!strip.mu.shape.contains(mu.shape)) continue;
        SparsePoly inner = rec(strip.mu, entries - 1);
        if (inner.is_zero()) continue;
        int deg = static_cast<int>(top.size() - s);
        std::vector<int> xe(ws.m(), 0);
        xe[entries - 1] = deg;
        SparsePoly mono(ws.m(), ws.ky());
        mono.add_term(xe, {}, pow2_rat(strip.n));
        acc += mono * inner;
      }
    ws.eskew_memo.emplace(std::move(key), acc);
    return acc;
  };
  if (ws.m() == 0) return (la == mu) ? ws.one() : ws.zero();
  SparsePoly result = rec(la, ws.m());
  hard_assert(result.is_symmetric_x(),
              "skew tableau sum is not symmetric for " + typed_partition_literal(la) + " / " +
                  typed_partition_literal(mu));
  return result;
}

SparsePoly eta_via_tableaux(const TypedPartition& la, Workspace& ws) {
  int k = la.k;
  SparsePoly acc = ws.zero();
  for (long long s = 0; s <= la.size(); ++s)
    for (const auto& shape : k_strict_between(Partition(), la.shape, s, k)) {
      if (shape.part(1) > k) continue;
      for (const auto& mu : typed_versions(shape, k)) {
        if (mu.type == 2) continue;
        SparsePoly skew = e_skew(la, mu, ws);
        if (skew.is_zero()) continue;
        acc += skew * ws.schur_s_conjugate(shape);
      }
    }
  return acc;
}

TypedTableau j_involution(const TypedTableau& t) {
  TypedTableau out;
  out.chain.reserve(t.chain.size());
  for (const auto& p : t.chain) out.chain.push_back(j_involution(p));
  return out;
}

namespace {

// grid[r][c] as strings; empty cells of the inner shape are "."
std::vector<std::vector<std::string>> tableau_grid(const TypedTableau& t) {
  const Partition& outer = t.outer().shape;
  const Partition& inner = t.inner().shape;
  std::vector<std::vector<std::string>> grid(outer.length());
  for (int r = 1; r <= outer.length(); ++r)
    grid[r - 1].assign(outer.part(r), ".");
  for (size_t i = 1; i < t.chain.size(); ++i) {
    const Partition& lo = t.chain[i - 1].shape;
    const Partition& hi = t.chain[i].shape;
    bool circled = (t.chain[i].type == 2);
    std::string label = std::to_string(i) + (circled ? "o" : "");
    for (int r = 1; r <= hi.length(); ++r)
      for (int c = lo.part(r) + 1; c <= hi.part(r); ++c) grid[r - 1][c - 1] = label;
  }
  (void)inner;
  return grid;
}

std::string join_grid(const std::vector<std::vector<std::string>>& grid) {
  size_t width = 1;
  for (const auto& row : grid)
    for (const auto& cell : row) width = std::max(width, cell.size());
  std::ostringstream out;
  for (const auto& row : grid) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      if (c) line += ' ';
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width - row[c].size(), ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

std::string render_tableau(const TypedTableau& t) { return join_grid(tableau_grid(t)); }

std::string render_bitableau(const TypedBitableau& u) {
  auto grid = tableau_grid(u.tableau);
  for (size_t r = 0; r < u.marked.size(); ++r)
    for (size_t c = 0; c < u.marked[r].size(); ++c)
      grid[r][c] = std::to_string(u.marked[r][c]) + "'";
  return join_grid(grid);
}

}  // namespace etaforge
