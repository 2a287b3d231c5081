#include "etaforge/raising_ops.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace etaforge {

void OperatorSpec::validate() const {
  std::set<std::pair<int, int>> seen;
  auto check = [&](const std::vector<std::pair<int, int>>& pairs) {
    for (auto [i, j] : pairs) {
      hard_assert(1 <= i && i < j && j <= nrows, "operator pair out of range");
      hard_assert(seen.insert({i, j}).second, "operator pair listed twice");
    }
  };
  check(inverse_pairs);
  check(plain_pairs);
}

OperatorSpec OperatorSpec::giambelli(const Partition& la, int k) {
  OperatorSpec spec;
  spec.nrows = la.length();
  auto inv = c_set(la, k);
  for (auto [i, j] : inv) spec.inverse_pairs.push_back({i, j});
  for (int i = 1; i < spec.nrows; ++i)
    for (int j = i + 1; j <= spec.nrows; ++j)
      if (!inv.count({i, j})) spec.plain_pairs.push_back({i, j});
  return spec;
}

OperatorSpec OperatorSpec::theta_series(const Partition& la, int k) {
  OperatorSpec spec;
  spec.nrows = la.length();
  for (int i = 1; i < spec.nrows; ++i)
    for (int j = i + 1; j <= spec.nrows; ++j) {
      if (la.part(i) + la.part(j) > 2 * k + j - i) spec.inverse_pairs.push_back({i, j});
      else spec.plain_pairs.push_back({i, j});
    }
  return spec;
}

OperatorSpec OperatorSpec::schur_q_series(int len) {
  OperatorSpec spec;
  spec.nrows = len;
  for (int i = 1; i < len; ++i)
    for (int j = i + 1; j <= len; ++j) spec.inverse_pairs.push_back({i, j});
  return spec;
}

OperatorSpec OperatorSpec::pieri_row(const Partition& la, int k) {
  OperatorSpec spec;
  int len = la.length();
  spec.nrows = len + 1;
  auto inv = c_set(la, k);
  for (auto [i, j] : inv) spec.inverse_pairs.push_back({i, j});
  for (int i = 1; i < len; ++i)
    for (int j = i + 1; j <= len; ++j)
      if (!inv.count({i, j})) spec.plain_pairs.push_back({i, j});
  return spec;
}

namespace {

struct PairFactor {
  int i, j;
  bool inverse;  // (1-R)/(1+R) when true, (1-R) otherwise
};

// Shared DFS over the operator monomials.  Pairs are processed grouped by
// second index descending, so a position is final once its group ends; the
// loop bound m <= alpha[j] is then exact and the enumeration terminates.
class Expander {
 public:
  Expander(const OperatorSpec& spec, std::vector<int> alpha, const Budget& budget,
           int star_slot)
      : alpha_(std::move(alpha)), budget_(budget), star_slot_(star_slot) {
    spec.validate();
    hard_assert(seq_length(alpha_) <= spec.nrows, "composition longer than operator rows");
    alpha_.resize(spec.nrows, 0);
    for (auto [i, j] : spec.inverse_pairs) factors_.push_back({i, j, true});
    for (auto [i, j] : spec.plain_pairs) factors_.push_back({i, j, false});
    std::sort(factors_.begin(), factors_.end(), [](const PairFactor& a, const PairFactor& b) {
      if (a.j != b.j) return a.j > b.j;
      return a.i > b.i;
    });
  }

  void run() { dfs(0, Int(1), false); }

  OperatorExpansion plain;       // all terms, or star-untouched terms
  OperatorExpansion m_involved;  // star-touched terms (star mode only)

 private:
  void record(const Int& coeff, bool touched) {
    for (int v : alpha_)
      if (v < 0) return;
    std::vector<int> key = alpha_;
    if (star_slot_ >= 0 && !touched) {
      hard_assert(key[star_slot_ - 1] >= 0, "star slot went negative");
      key.erase(key.begin() + (star_slot_ - 1));
    }
    std::sort(key.begin(), key.end(), std::greater<int>());
    key = trimmed(std::move(key));
    auto& terms = (star_slot_ >= 0 && touched) ? m_involved.terms : plain.terms;
    auto [it, inserted] = terms.emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms.erase(it);
    }
  }

  void dfs(size_t idx, Int coeff, bool touched) {
    if (++visits_ > budget_.visits)
      fail(ErrorCode::ExpansionBudgetExceeded,
           "raising-operator expansion exceeded " + std::to_string(budget_.visits) +
               " visits");
    if (idx == factors_.size()) {
      record(coeff, touched);
      return;
    }
    const PairFactor& f = factors_[idx];
    int avail = alpha_[f.j - 1];
    if (avail < 0) return;  // the column is final below this value
    int max_m = f.inverse ? avail : std::min(avail, 1);
    for (int m = 0; m <= max_m; ++m) {
      Int c = coeff;
      if (m > 0) {
        if (f.inverse) c *= (m % 2 == 0) ? 2 : -2;
        else c = -c;
      }
      alpha_[f.i - 1] += m;
      alpha_[f.j - 1] -= m;
      bool t = touched || (m > 0 && (f.i == star_slot_ || f.j == star_slot_));
      dfs(idx + 1, std::move(c), t);
      alpha_[f.i - 1] -= m;
      alpha_[f.j - 1] += m;
    }
  }

  std::vector<int> alpha_;
  Budget budget_;
  int star_slot_;  // 1-based; -1 when not in star mode
  std::vector<PairFactor> factors_;
  long long visits_ = 0;
};

}  // namespace

OperatorExpansion expand(const OperatorSpec& spec, std::vector<int> alpha,
                         const Budget& budget) {
  Expander ex(spec, std::move(alpha), budget, -1);
  ex.run();
  return std::move(ex.plain);
}

StarExpansion expand_star(const TypedPartition& la, const Budget& budget) {
  if (!la.positive_type())
    fail(ErrorCode::NoPartEqualK, "star split needs a part equal to k");
  int slot = k_length(la) + 1;
  hard_assert(la.shape.part(slot) == la.k, "slot of the part equal to k");
  Expander ex(OperatorSpec::giambelli(la.shape, la.k), la.shape.parts(), budget, slot);
  ex.run();
  return StarExpansion{std::move(ex.plain), std::move(ex.m_involved)};
}

}  // namespace etaforge
