#include "etaforge/eta_engine.hpp"

namespace etaforge {

namespace {

SparsePoly apply_expansion(const OperatorExpansion& exp, int k, Workspace& ws) {
  SparsePoly acc = ws.zero();
  for (const auto& [comp, c] : exp.terms) {
    SparsePoly t = ws.theta_prod(k, comp);
    t *= Rat(c);
    acc += t;
  }
  return acc;
}

}  // namespace

SparsePoly theta_poly(const Partition& la, int k, Workspace& ws) {
  auto key = std::make_pair(k, la);
  auto it = ws.theta_memo_big.find(key);
  if (it != ws.theta_memo_big.end()) return it->second;
  auto exp = expand(OperatorSpec::theta_series(la, k), la.parts(), ws.budget());
  SparsePoly p = apply_expansion(exp, k, ws);
  ws.theta_memo_big.emplace(std::move(key), p);
  return p;
}

SparsePoly theta_hat_poly(const Partition& la, int k, Workspace& ws) {
  auto key = std::make_pair(k, la);
  auto it = ws.theta_hat_memo.find(key);
  if (it != ws.theta_hat_memo.end()) return it->second;
  auto exp = expand(OperatorSpec::giambelli(la, k), la.parts(), ws.budget());
  SparsePoly p = apply_expansion(exp, k, ws);
  ws.theta_hat_memo.emplace(std::move(key), p);
  return p;
}

SparsePoly theta_hat_on(const Partition& la, const std::vector<int>& comp, int k,
                        Workspace& ws) {
  OperatorSpec spec = OperatorSpec::giambelli(la, k);
  std::vector<int> alpha = comp;
  int len = seq_length(alpha);
  if (len > spec.nrows) {
    // extra rows carry plain factors only
    OperatorSpec wide;
    wide.nrows = len;
    wide.inverse_pairs = spec.inverse_pairs;
    auto inv = c_set(la, k);
    for (int i = 1; i < len; ++i)
      for (int j = i + 1; j <= len; ++j)
        if (!inv.count({i, j})) wide.plain_pairs.push_back({i, j});
    spec = std::move(wide);
  }
  return apply_expansion(expand(spec, std::move(alpha), ws.budget()), k, ws);
}

SparsePoly eta_hat(const Partition& la, int k, Workspace& ws) {
  SparsePoly p = theta_hat_poly(la, k, ws);
  p *= pow2_rat(-k_length(la, k));
  return p;
}

SparsePoly eta_tilde(const Partition& la, int k, Workspace& ws) {
  if (!la.has_part(k)) return ws.zero();
  SparsePoly p = ws.e(k) * theta_poly(la.remove_part(k), k, ws);
  p *= pow2_rat(-k_length(la, k));
  return p;
}

SparsePoly eta_poly(const TypedPartition& la, Workspace& ws) {
  auto it = ws.eta_memo.find(la);
  if (it != ws.eta_memo.end()) return it->second;
  int k = la.k;
  SparsePoly p(0, 0);
  if (la.type == 0) {
    p = theta_hat_poly(la.shape, k, ws).exact_div_pow2(k_length(la));
  } else {
    SparsePoly hat = theta_hat_poly(la.shape, k, ws);
    SparsePoly til = ws.e(k) * theta_poly(la.shape.remove_part(k), k, ws);
    SparsePoly sum = (la.type == 1) ? hat + til : hat - til;
    p = sum.exact_div_pow2(k_length(la) + 1);
  }
  ws.eta_memo.emplace(la, p);
  return p;
}

SparsePoly eta_via_star(const TypedPartition& la, Workspace& ws) {
  int k = la.k;
  if (la.type == 0) return theta_hat_poly(la.shape, k, ws).exact_div_pow2(k_length(la));
  StarExpansion star = expand_star(la, ws.budget());
  const SparsePoly& eta_gen = (la.type == 1) ? ws.eta_r(k, k) : ws.eta_k_prime(k);
  SparsePoly plain = apply_expansion(star.plain, k, ws);
  SparsePoly touched = apply_expansion(star.m_involved, k, ws);
  // 2 * eta_k^(type) * plain + touched, all over 2^{l_k + 1}
  SparsePoly acc = eta_gen * plain;
  acc *= Rat(2);
  acc += touched;
  return acc.exact_div_pow2(k_length(la) + 1);
}

SparsePoly eta_zero_case(const TypedPartition& la, int ky) {
  int k = la.k;
  int la1 = la.shape.part(1);
  if (la1 > k || (la1 == k && la.type == 2)) return SparsePoly(0, ky);
  return ssyt_sum(la.shape.conjugate(), ky, 0, ky);
}

SparsePoly eta_zero_spec(const TypedPartition& la, int ky) {
  SparsePoly closed = eta_zero_case(la, ky);
  Workspace ws(1, ky);
  SparsePoly direct = eta_poly(la, ws).set_x_zero(1);
  hard_assert(closed.embed(1, 0, ky, 0) == direct,
              "closed form of eta at x=0 disagrees with direct substitution for " +
                  typed_partition_literal(la));
  return closed;
}

std::vector<ReduceTerm> reduce_first_variable(const TypedPartition& la, Workspace& ws) {
  hard_assert(ws.m() >= 1, "reduction needs at least one x variable");
  std::vector<ReduceTerm> terms;
  for (int p = 0; p <= la.size(); ++p)
    for (const auto& strip : typed_strips_below(la, la.size() - p))
      terms.push_back(ReduceTerm{p, strip.mu, strip.n});

  Workspace tail(ws.m() - 1, ws.ky());
  SparsePoly rhs = ws.zero();
  SparsePoly x1 = SparsePoly::x_var(1, ws.m(), ws.ky());
  SparsePoly x1pow = ws.one();
  int cur_p = 0;
  for (const auto& t : terms) {
    while (cur_p < t.p) {
      x1pow = x1pow * x1;
      ++cur_p;
    }
    SparsePoly part = eta_poly(t.mu, tail).embed(ws.m(), 1, ws.ky(), 0);
    part *= pow2_rat(t.n);
    rhs += x1pow * part;
  }
  hard_assert(rhs == eta_poly(la, ws),
              "first-variable reduction failed for " + typed_partition_literal(la));
  return terms;
}

}  // namespace etaforge
