#include "etaforge/symfunc.hpp"

#include <algorithm>
#include <functional>

namespace etaforge {

void Workspace::extend_q(int r) {
  if (static_cast<int>(q_list_.size()) > r) return;
  int top = std::max<int>(r, 4);
  // series coefficients of prod_i (1+x_i t)/(1-x_i t) up to t^top
  std::vector<SparsePoly> s;
  s.reserve(top + 1);
  s.push_back(one());
  for (int d = 1; d <= top; ++d) s.push_back(zero());
  for (int i = 1; i <= m_; ++i) {
    std::vector<SparsePoly> next(top + 1, zero());
    SparsePoly xi = SparsePoly::x_var(i, m_, ky_);
    for (int d = 0; d <= top; ++d) {
      // factor (1+x t)/(1-x t) = 1 + 2xt + 2x^2t^2 + ...
      next[d] = s[d];
      SparsePoly xp = one();
      for (int j = 1; j <= d; ++j) {
        xp = xp * xi;
        SparsePoly add = xp * s[d - j];
        add *= Rat(2);
        next[d] += add;
      }
    }
    s = std::move(next);
  }
  if (max_degree_)
    for (auto& p : s) p = p.truncate_degree(*max_degree_);
  // append only; handed-out references into the deque stay valid
  for (size_t d = q_list_.size(); d < s.size(); ++d) q_list_.push_back(std::move(s[d]));
}

const SparsePoly& Workspace::q(int r) {
  if (!zero_init_) {
    zero_poly_ = zero();
    zero_init_ = true;
  }
  if (r < 0) return zero_poly_;
  extend_q(r);
  return q_list_[r];
}

const SparsePoly& Workspace::e(int r) {
  if (!zero_init_) {
    zero_poly_ = zero();
    zero_init_ = true;
  }
  if (r < 0 || r > ky_) return zero_poly_;
  if (e_list_.empty()) {
    e_list_.assign(ky_ + 1, zero());
    e_list_[0] = one();
    for (int j = 1; j <= ky_; ++j) {
      SparsePoly yj = SparsePoly::y_var(j, m_, ky_);
      for (int d = std::min(j, ky_); d >= 1; --d) e_list_[d] += yj * e_list_[d - 1];
    }
  }
  return e_list_[r];
}

const SparsePoly& Workspace::theta(int k, int r) {
  auto key = std::make_pair(k, r);
  auto it = theta_memo_.find(key);
  if (it != theta_memo_.end()) return it->second;
  SparsePoly acc = zero();
  if (r >= 0)
    for (int i = 0; i <= std::min(r, ky_); ++i) acc += q(r - i) * e(i);
  return theta_memo_.emplace(key, std::move(acc)).first->second;
}

const SparsePoly& Workspace::theta_prod(int k, const std::vector<int>& comp) {
  auto key = std::make_pair(k, comp);
  auto it = theta_prod_memo_.find(key);
  if (it != theta_prod_memo_.end()) return it->second;
  SparsePoly acc = one();
  if (!comp.empty()) {
    std::vector<int> rest(comp.begin() + 1, comp.end());
    acc = theta(k, comp[0]) * theta_prod(k, rest);
  }
  return theta_prod_memo_.emplace(std::move(key), std::move(acc)).first->second;
}

const SparsePoly& Workspace::q_prod(const std::vector<int>& comp) {
  auto it = q_prod_memo_.find(comp);
  if (it != q_prod_memo_.end()) return it->second;
  SparsePoly acc = one();
  if (!comp.empty()) {
    std::vector<int> rest(comp.begin() + 1, comp.end());
    acc = q(comp[0]) * q_prod(rest);
  }
  return q_prod_memo_.emplace(comp, std::move(acc)).first->second;
}

const SparsePoly& Workspace::eta_r(int k, int r) {
  auto key = std::make_pair(k, r);
  auto it = eta_r_memo_.find(key);
  if (it != eta_r_memo_.end()) return it->second;
  SparsePoly acc = zero();
  if (r >= 0 && r < k) {
    acc = theta(k, r);  // e_r + 2 sum P_{r-i} e_i
  } else if (r >= k) {
    // sum_{i=0..r} P_{r-i} e_i = (theta_r + e_r) / 2
    acc = theta(k, r) + e(r);
    acc *= Rat(1, 2);
  }
  return eta_r_memo_.emplace(key, std::move(acc)).first->second;
}

const SparsePoly& Workspace::eta_k_prime(int k) {
  auto key = std::make_pair(k, -1000);
  auto it = eta_r_memo_.find(key);
  if (it != eta_r_memo_.end()) return it->second;
  // sum_{i=0..k-1} P_{k-i} e_i = (theta_k - e_k) / 2
  SparsePoly acc = theta(k, k) - e(k);
  acc *= Rat(1, 2);
  return eta_r_memo_.emplace(key, std::move(acc)).first->second;
}

SparsePoly Workspace::schur_q(const Partition& la) {
  for (int i = 1; i < la.length(); ++i)
    if (la.part(i) == la.part(i + 1))
      fail(ErrorCode::NotStrict, "Schur Q needs distinct parts: " + partition_literal(la));
  auto exp = expand(OperatorSpec::schur_q_series(la.length()), la.parts(), budget_);
  SparsePoly acc = zero();
  for (const auto& [comp, c] : exp.terms) {
    SparsePoly t = q_prod(comp);
    t *= Rat(c);
    acc += t;
  }
  return acc;
}

SparsePoly Workspace::schur_p(const Partition& la) {
  return schur_q(la).exact_div_pow2(la.length());
}

SparsePoly ssyt_sum(const Partition& shape, int nvars, int m_dims, int ky_dims) {
  SparsePoly acc(m_dims, ky_dims);
  if (shape.empty()) return SparsePoly::one(m_dims, ky_dims);
  int rows = shape.length();
  std::vector<std::vector<int>> fill(rows);
  for (int r = 0; r < rows; ++r) fill[r].assign(shape.part(r + 1), 0);
  std::vector<int> weight(nvars + 1, 0);
  std::function<void(int, int)> go = [&](int r, int c) {
    if (r == rows) {
      std::vector<int> ye(weight.begin() + 1, weight.end());
      acc.add_term({}, ye, Rat(1));
      return;
    }
    int nr = r, nc = c + 1;
    if (nc >= shape.part(r + 1)) {
      nr = r + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[r][c - 1]);                       // weak along rows
    if (r > 0 && c < shape.part(r)) lo = std::max(lo, fill[r - 1][c] + 1);  // strict down
    for (int v = lo; v <= nvars; ++v) {
      fill[r][c] = v;
      ++weight[v];
      go(nr, nc);
      --weight[v];
    }
  };
  if (nvars >= 1) go(0, 0);
  return acc;
}

const SparsePoly& Workspace::schur_s_conjugate(const Partition& mu) {
  auto it = s_conj_memo_.find(mu);
  if (it != s_conj_memo_.end()) return it->second;
  SparsePoly p = ssyt_sum(mu.conjugate(), ky_, m_, ky_);
  return s_conj_memo_.emplace(mu, std::move(p)).first->second;
}

SparsePoly Workspace::skew_q_determinant(const Partition& la, const Partition& mu) {
  if (!la.contains(mu))
    fail(ErrorCode::NotAStrip, "skew determinant needs mu inside lambda");
  int n = la.length();
  if (n == 0) return one();
  std::vector<std::vector<SparsePoly>> a(n, std::vector<SparsePoly>(n, zero()));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) a[i - 1][j - 1] = q(la.part(i) - mu.part(j) + j - i);
  // expansion over column subsets, one row at a time
  std::vector<SparsePoly> dp(size_t(1) << n, zero());
  dp[0] = one();
  for (size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].is_zero()) continue;
    int row = __builtin_popcount(static_cast<unsigned>(mask));
    if (row == n) continue;
    for (int col = 0; col < n; ++col) {
      if (mask & (size_t(1) << col)) continue;
      if (a[row][col].is_zero()) continue;
      // parity of inversions added: used columns to the right of col
      int above = __builtin_popcount(static_cast<unsigned>(mask >> (col + 1)));
      SparsePoly add = dp[mask] * a[row][col];
      if (above % 2 == 1) add *= Rat(-1);
      dp[mask | (size_t(1) << col)] += add;
    }
  }
  return dp[dp.size() - 1];
}

std::map<Partition, Rat> expand_in_schur_p(const SparsePoly& f, Workspace& ws) {
  for (const auto& [key, c] : f.terms())
    for (int j = 1; j <= f.yvars(); ++j)
      if (key[f.xvars() + j] != 0)
        fail(ErrorCode::NotSymmetric, "Schur P expansion expects an x-only polynomial");
  if (!f.is_symmetric_x())
    fail(ErrorCode::NotSymmetric, "polynomial is not symmetric in x");
  hard_assert(f.xvars() == ws.m() && f.yvars() == ws.ky(), "workspace variable mismatch");

  std::map<Partition, Rat> out;
  for (int d = 0; d <= f.total_degree(); ++d) {
    SparsePoly residual = f.homogeneous_component(d);
    if (residual.is_zero()) continue;
    if (d > f.xvars())
      fail(ErrorCode::InsufficientVariables,
           "degree " + std::to_string(d) + " component needs at least that many x variables");
    while (!residual.is_zero()) {
      const auto& [key, coeff] = *residual.terms().begin();  // lex-greatest monomial
      std::vector<int> exps;
      for (int i = 1; i <= f.xvars(); ++i)
        if (key[i] != 0) exps.push_back(key[i]);
      bool strict_ok = true;
      for (size_t i = 0; i + 1 < exps.size(); ++i)
        if (exps[i] <= exps[i + 1]) strict_ok = false;
      if (!strict_ok)
        fail(ErrorCode::NonZeroResidual,
             "leading monomial is not a strict partition; not in the Schur P span");
      Partition alpha(exps);
      Rat c = coeff;
      SparsePoly p = ws.schur_p(alpha);
      p *= c;
      residual -= p;
      auto [it, inserted] = out.emplace(alpha, c);
      if (!inserted) it->second += c;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace etaforge
