#pragma once

#include <deque>
#include <map>
#include <tuple>
#include <vector>

#include "etaforge/partition_core.hpp"
#include "etaforge/raising_ops.hpp"
#include "etaforge/sparse_poly.hpp"

namespace etaforge {

/// Memo pool for one variable set (x_1..x_m, y_1..y_ky).  Not meant to be
/// shared across threads; sweeps that parallelize use one workspace each.
class Workspace {
 public:
  Workspace(int m, int ky) : m_(m), ky_(ky) {}
  Workspace(const Truncation& t, int ky) : m_(t.m), ky_(ky), max_degree_(t.max_degree) {}

  int m() const { return m_; }
  int ky() const { return ky_; }
  const Budget& budget() const { return budget_; }
  void set_budget(const Budget& b) { budget_ = b; }

  SparsePoly zero() const { return SparsePoly(m_, ky_); }
  SparsePoly one() const { return SparsePoly::one(m_, ky_); }

  /// Coefficient of t^r in prod_i (1+x_i t)/(1-x_i t).
  const SparsePoly& q(int r);
  /// Elementary symmetric e_r(y); zero outside 0..ky.
  const SparsePoly& e(int r);
  /// theta_r = sum_i q_{r-i}(x) e_i(y).
  const SparsePoly& theta(int k, int r);
  /// Product theta_{c_1} ... theta_{c_l} for a sorted composition.
  const SparsePoly& theta_prod(int k, const std::vector<int>& comp);
  const SparsePoly& q_prod(const std::vector<int>& comp);

  const SparsePoly& eta_r(int k, int r);
  const SparsePoly& eta_k_prime(int k);

  SparsePoly schur_q(const Partition& la);  // strict parts required
  SparsePoly schur_p(const Partition& la);

  /// s_{mu'}(y) by semistandard tableau enumeration.
  const SparsePoly& schur_s_conjugate(const Partition& mu);

  /// det(q_{la_i - mu_j + j - i}).
  SparsePoly skew_q_determinant(const Partition& la, const Partition& mu);

  // caches shared by the eta engine and the tableau formulas
  std::map<TypedPartition, SparsePoly> eta_memo;
  std::map<std::pair<int, Partition>, SparsePoly> theta_hat_memo;
  std::map<std::pair<int, Partition>, SparsePoly> theta_memo_big;
  std::map<std::tuple<TypedPartition, TypedPartition, int>, SparsePoly> eskew_memo;

 private:
  void extend_q(int r);

  int m_;
  int ky_;
  std::optional<int> max_degree_;
  Budget budget_;
  std::deque<SparsePoly> q_list_;
  std::deque<SparsePoly> e_list_;
  SparsePoly zero_poly_;
  bool zero_init_ = false;
  std::map<std::pair<int, int>, SparsePoly> theta_memo_;
  std::map<std::pair<int, std::vector<int>>, SparsePoly> theta_prod_memo_;
  std::map<std::vector<int>, SparsePoly> q_prod_memo_;
  std::map<std::pair<int, int>, SparsePoly> eta_r_memo_;
  std::map<Partition, SparsePoly> s_conj_memo_;
};

/// Exact expansion of a symmetric x-polynomial in the Schur P basis.
/// Requires every homogeneous degree <= number of x variables.
std::map<Partition, Rat> expand_in_schur_p(const SparsePoly& f, Workspace& ws);

/// Semistandard Young tableau generating sum in ky variables for a shape
/// (rows weakly increase, columns strictly increase, entries <= nvars).
SparsePoly ssyt_sum(const Partition& shape, int nvars, int m_dims, int ky_dims);

}  // namespace etaforge
