#include "etaforge/strips_pieri.hpp"

#include <algorithm>
#include <set>

namespace etaforge {

namespace {

// Components of a box set under "share at least a vertex" adjacency.
int component_count(const std::vector<Box>& boxes) {
  int n = static_cast<int>(boxes.size());
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(boxes[i].row - boxes[j].row) <= 1 &&
          std::abs(boxes[i].col - boxes[j].col) <= 1)
        parent[find(i)] = find(j);
  std::set<int> roots;
  for (int i = 0; i < n; ++i) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

bool k_prime_related_rc(int r, int c, int r2, int c2, int k) {
  // [r,c] left, [r2,c2] right
  return c + c2 == 2 * k + 1 + r - r2;
}

}  // namespace

PieriRelation pieri_relation(const Partition& la, const Partition& mu, int k) {
  PieriRelation none{false, 0, 0};
  int cols = std::max(la.part(1), mu.part(1));
  std::vector<int> L(cols + 2, 0), M(cols + 2, 0);
  for (int c = 1; c <= cols; ++c) {
    L[c] = la.column_height(c);
    M[c] = mu.column_height(c);
  }

  // outside the first k columns nothing is removed and at most one box per
  // column is added
  for (int c = k + 1; c <= cols; ++c)
    if (M[c] < L[c] || M[c] > L[c] + 1) return none;
  // inside them the removal must leave room for the horizontal strip
  for (int c = 1; c <= std::min(k, cols); ++c)
    if (M[c] > L[c] + 1) return none;

  // search for a valid intermediate column profile gamma on columns 1..k
  int kc = std::min(k, cols);
  std::vector<int> gamma(kc + 1, 0);
  std::function<bool(int, int)> choose = [&](int c, int prev) -> bool {
    if (c > kc) {
      // removal intervals (gamma_c, L_c] must be pairwise row-disjoint
      for (int c1 = 1; c1 <= kc; ++c1)
        for (int c2 = c1 + 1; c2 <= kc; ++c2) {
          int lo = std::max(gamma[c1], gamma[c2]);
          int hi = std::min(L[c1], L[c2]);
          if (lo < hi) return false;
        }
      return gamma[kc] >= (kc < cols ? L[kc + 1] : 0) || kc == 0;
    }
    for (int g : {M[c], M[c] - 1}) {
      if (g < 0 || g > L[c] || g > prev) continue;
      if (g < M[c] - 1) continue;
      gamma[c] = g;
      if (choose(c + 1, g)) return true;
    }
    return false;
  };
  if (kc > 0 && !choose(1, std::max(L[1], M[1]) + 1)) return none;

  // boxes of mu \ la, split by side
  std::vector<Box> added_right;
  for (int c = k + 1; c <= cols; ++c)
    for (int r = L[c] + 1; r <= M[c]; ++r) added_right.push_back({r, c});

  // matching conditions on the first k columns
  std::set<Box> mentioned;
  for (int i = 1; i <= std::min(k, cols); ++i) {
    if (M[i] == L[i] && L[i] >= 1) {
      std::vector<Box> rel;
      for (const Box& b : added_right)
        if (k_prime_related_rc(L[i], i, b.row, b.col, k)) rel.push_back(b);
      if (rel.size() > 1) return none;
      for (const Box& b : rel) mentioned.insert(b);
    } else if (M[i] < L[i]) {
      int row_of_all = -1;
      for (int r = std::max(M[i], 1); r <= L[i]; ++r) {
        std::vector<Box> rel;
        for (const Box& b : added_right)
          if (k_prime_related_rc(r, i, b.row, b.col, k)) rel.push_back(b);
        if (rel.size() != 1) return none;
        if (row_of_all == -1) row_of_all = rel[0].row;
        else if (row_of_all != rel[0].row) return none;
        mentioned.insert(rel[0]);
      }
    }
  }

  std::vector<Box> a_set;
  for (const Box& b : added_right)
    if (!mentioned.count(b)) a_set.push_back(b);
  int n = component_count(a_set);
  int m = k_length(la, k) - k_length(mu, k) + n +
          ((la.has_part(k) && !mu.has_part(k)) ? 1 : 0);
  return PieriRelation{true, n, m};
}

std::vector<PieriStep> pieri_steps(const Partition& la, int p, int k) {
  hard_assert(p >= 0, "pieri_steps needs p >= 0");
  std::vector<PieriStep> out;
  long long target = la.size() + p;
  int max_rows = la.length() + 1;
  // the removed vertical strip (one box per row) can migrate into row 1
  int max_cols = la.part(1) + p + la.length();
  for (const auto& mu : k_strict_partitions_of(static_cast<int>(target), k, max_cols, max_rows)) {
    PieriRelation rel = pieri_relation(la, mu, k);
    if (!rel.related) continue;
    hard_assert(rel.exponent >= 0, "negative Pieri exponent");
    out.push_back(PieriStep{mu, rel.n_comp, rel.exponent});
  }
  return out;
}

namespace {

struct RimSets {
  bool is_strip = false;
  std::vector<Box> r_set;
  std::vector<Box> a_boxes;  // finite stand-ins; row-zero tail folded in
};

// Characterization of k'-strips by the rim condition and the k''-related
// right-boundary boxes of mu (bottom boxes of la in their column, row zero
// included).
RimSets rim_characterization(const Partition& la, const Partition& mu, int k) {
  RimSets out;
  std::vector<Box> skew, skew_left;
  for (int r = 1; r <= la.length(); ++r)
    for (int c = mu.part(r) + 1; c <= la.part(r); ++c) {
      skew.push_back({r, c});
      if (c <= k) skew_left.push_back({r, c});
    }

  // (i) inside the rim of la, right part a horizontal strip
  for (const Box& b : skew)
    if (la.part(b.row + 1) >= b.col + 1) return out;
  for (int c = k + 1; c <= la.part(1); ++c)
    if (la.column_height(c) - mu.column_height(c) > 1) return out;

  // candidate boundary boxes of mu: bottom boxes of la in their column
  int ray_start = std::max(k, la.part(1)) + 1;  // row-zero boxes live past here
  int depth_cap = 0;
  for (const Box& b : skew_left) depth_cap = std::max(depth_cap, (k - b.col) + b.row);
  int col_cap = k + std::max(depth_cap, 1) + 2;

  std::vector<Box> candidates;
  for (int c = k + 1; c <= la.part(1); ++c) {
    int h = la.column_height(c);
    if (h >= 1 && mu.column_height(c) == h) candidates.push_back({h, c});
  }
  for (int c = ray_start; c <= std::max(col_cap, ray_start + 1); ++c)
    candidates.push_back({0, c});

  std::vector<Box> r_set;
  std::vector<Box> a_boxes;
  for (const Box& b : candidates) {
    bool related = false;
    for (const Box& l : skew_left)
      if (is_k_dblprime_related(b, l, k)) related = true;
    (related ? r_set : a_boxes).push_back(b);
  }

  // (ii) no two boxes of R are k''-related
  for (size_t i = 0; i < r_set.size(); ++i)
    for (size_t j = i + 1; j < r_set.size(); ++j)
      if (is_k_dblprime_related(r_set[i], r_set[j], k)) return out;

  // (iii) a vertical pair in the skew shape must match exactly two boxes of
  // R lying in one row
  for (int c = 1; c <= la.part(1); ++c) {
    std::vector<int> rows;
    for (const Box& b : skew)
      if (b.col == c) rows.push_back(b.row);
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = i + 1; j < rows.size(); ++j) {
        std::set<Box> rel;
        for (const Box& rb : r_set) {
          if (is_k_dblprime_related(rb, Box{rows[i], c}, k)) rel.insert(rb);
          if (is_k_dblprime_related(rb, Box{rows[j], c}, k)) rel.insert(rb);
        }
        if (rel.size() != 2) return out;
        auto it = rel.begin();
        int row0 = it->row;
        ++it;
        if (it->row != row0) return out;
      }
  }

  out.is_strip = true;
  out.r_set = std::move(r_set);
  out.a_boxes = std::move(a_boxes);
  return out;
}

PieriRelation strip_pieri_route(const Partition& la, const Partition& mu, int k) {
  long long p = la.size() + 2LL * k;
  long long r = la.size() - mu.size();
  std::vector<int> target;
  target.push_back(static_cast<int>(p + r));
  for (int v : mu.parts()) target.push_back(v);
  return pieri_relation(la, Partition(std::move(target)), k);
}

}  // namespace

bool is_kprime_strip(const Partition& la, const Partition& mu, int k) {
  if (!la.contains(mu)) return false;
  bool via_pieri = strip_pieri_route(la, mu, k).related;
  bool via_rim = rim_characterization(la, mu, k).is_strip;
  if (via_pieri != via_rim)
    fail(ErrorCode::PathDisagreement,
         "strip test mismatch for " + partition_literal(la) + " / " + partition_literal(mu) +
             " at k=" + std::to_string(k) + ": pieri=" + std::to_string(via_pieri) +
             " rim=" + std::to_string(via_rim));
  return via_pieri;
}

int strip_m(const Partition& la, const Partition& mu, int k) {
  if (!is_kprime_strip(la, mu, k))
    fail(ErrorCode::NotAStrip,
         partition_literal(la) + " / " + partition_literal(mu) + " is not a k'-strip");
  return strip_pieri_route(la, mu, k).exponent;
}

StripStats strip_stats(const TypedPartition& la, const TypedPartition& mu) {
  hard_assert(la.k == mu.k, "strip_stats needs matching k");
  StripStats st;
  st.m_stat = strip_m(la.shape, mu.shape, la.k);
  st.n_hat = k_length(mu) - k_length(la) + st.m_stat;
  st.is_typed_strip = (la.type + mu.type != 3);
  bool drop = la.shape.has_part(la.k) && !mu.shape.has_part(la.k);
  st.n_typed = st.n_hat - (drop ? 1 : 0);
  return st;
}

std::optional<int> strip_na_direct(const Partition& la, const Partition& mu, int k) {
  if (!la.contains(mu)) return std::nullopt;
  RimSets rim = rim_characterization(la, mu, k);
  if (!rim.is_strip) return std::nullopt;
  return component_count(rim.a_boxes);
}

std::vector<TypedStrip> typed_strips_below(const TypedPartition& la, long long size) {
  std::vector<TypedStrip> out;
  for (const auto& shape : k_strict_between(Partition(), la.shape, size, la.k)) {
    if (!is_kprime_strip(la.shape, shape, la.k)) continue;
    for (const auto& mu : typed_versions(shape, la.k)) {
      StripStats st = strip_stats(la, mu);
      if (!st.is_typed_strip) continue;
      out.push_back(TypedStrip{mu, st.n_typed});
    }
  }
  return out;
}

std::vector<TypedStrip> typed_strips_above(const TypedPartition& sigma,
                                           const Partition& bound, long long size) {
  std::vector<TypedStrip> out;
  for (const auto& shape : k_strict_between(sigma.shape, bound, size, sigma.k)) {
    if (!is_kprime_strip(shape, sigma.shape, sigma.k)) continue;
    for (const auto& nu : typed_versions(shape, sigma.k)) {
      StripStats st = strip_stats(nu, sigma);
      if (!st.is_typed_strip) continue;
      out.push_back(TypedStrip{nu, st.n_typed});
    }
  }
  return out;
}

}  // namespace etaforge
