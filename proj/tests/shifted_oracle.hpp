#pragma once

// Test-only oracle: marked shifted (skew) tableau enumeration for Schur Q/P
// functions.  Kept independent of the raising-operator implementation it
// cross-checks.

#include <functional>
#include <vector>

#include "etaforge/partition_core.hpp"
#include "etaforge/sparse_poly.hpp"

namespace etaforge::testoracle {

// Letters encoded as 2a-1 (a') and 2a (a), so numeric order is
// 1' < 1 < 2' < 2 < ... ; weight of both is x_a.
inline SparsePoly shifted_tableau_sum(const Partition& la, const Partition& mu, int m,
                                      bool primes_on_diagonal) {
  hard_assert(la.contains(mu), "shifted oracle needs mu inside lambda");
  for (int i = 1; i < la.length(); ++i)
    hard_assert(la.part(i) > la.part(i + 1), "shifted oracle needs strict lambda");
  for (int i = 1; i < mu.length(); ++i)
    hard_assert(mu.part(i) > mu.part(i + 1) || mu.part(i + 1) == 0,
                "shifted oracle needs strict mu");

  SparsePoly acc(m, 0);
  int rows = la.length();
  // cell (r, c) in shifted coordinates: row r spans columns r .. r+la_r-1
  std::vector<std::vector<int>> fill(rows + 1);
  for (int r = 1; r <= rows; ++r) fill[r].assign(r + la.part(r), 0);
  std::vector<int> weight(m + 1, 0);

  std::function<void(int, int)> go = [&](int r, int c) {
    if (r > rows) {
      std::vector<int> xe(weight.begin() + 1, weight.end());
      acc.add_term(xe, {}, Rat(1));
      return;
    }
    int row_lo = r + mu.part(r);          // first skew column of row r
    int row_hi = r + la.part(r) - 1;      // last column of row r
    if (c > row_hi || row_lo > row_hi) {
      int nr = r + 1;
      go(nr, nr + mu.part(nr));
      return;
    }
    if (c < row_lo) {
      go(r, row_lo);
      return;
    }
    bool on_diagonal = (c == r);
    // neighbors; cells cut out by mu impose no constraint
    int left = (c - 1 >= row_lo) ? fill[r][c - 1] : 0;
    int up = 0;
    if (r > 1) {
      int prev_lo = (r - 1) + mu.part(r - 1);
      int prev_hi = (r - 1) + la.part(r - 1) - 1;
      if (c >= prev_lo && c <= prev_hi) up = fill[r - 1][c];
    }
    for (int letter = 1; letter <= 2 * m; ++letter) {
      bool primed = (letter % 2 == 1);
      if (primed && on_diagonal && !primes_on_diagonal) continue;
      if (left != 0) {
        if (letter < left) continue;
        if (letter == left && primed) continue;  // primed strict along rows
      }
      if (up != 0) {
        if (letter < up) continue;
        if (letter == up && !primed) continue;  // unprimed strict down columns
      }
      fill[r][c] = letter;
      int a = (letter + 1) / 2;
      ++weight[a];
      go(r, c + 1);
      --weight[a];
      fill[r][c] = 0;
    }
  };
  go(1, 1 + mu.part(1));
  return acc;
}

inline SparsePoly schur_q_oracle(const Partition& la, int m) {
  return shifted_tableau_sum(la, Partition(), m, true);
}

inline SparsePoly schur_p_skew_oracle(const Partition& la, const Partition& mu, int m) {
  return shifted_tableau_sum(la, mu, m, false);
}

}  // namespace etaforge::testoracle
