#pragma once

#include <vector>

#include "etaforge/strips_pieri.hpp"
#include "etaforge/symfunc.hpp"

namespace etaforge {

/// Theta polynomial: strict-inequality operator series applied to theta_la.
SparsePoly theta_poly(const Partition& la, int k, Workspace& ws);

/// Giambelli operator applied to theta_la.
SparsePoly theta_hat_poly(const Partition& la, int k, Workspace& ws);

/// Giambelli operator of la applied to an arbitrary integer sequence.
SparsePoly theta_hat_on(const Partition& la, const std::vector<int>& comp, int k,
                        Workspace& ws);

/// 2^{-l_k(la)} * theta_hat; coefficients may be half-integral here.
SparsePoly eta_hat(const Partition& la, int k, Workspace& ws);

/// 2^{-l_k(la)} e_k(y) Theta_{la-k}; zero when no part equals k.
SparsePoly eta_tilde(const Partition& la, int k, Workspace& ws);

/// Eta polynomial via the type-split formula (production route, memoized).
SparsePoly eta_poly(const TypedPartition& la, Workspace& ws);

/// Eta polynomial via the star action on the operator expansion
/// (verification route).
SparsePoly eta_via_star(const TypedPartition& la, Workspace& ws);

/// The closed-form value of eta at x = 0 (a polynomial in y alone).
SparsePoly eta_zero_case(const TypedPartition& la, int ky);

/// Same, but also checked against the eta polynomial with x set to zero.
SparsePoly eta_zero_spec(const TypedPartition& la, int ky);

struct ReduceTerm {
  int p = 0;
  TypedPartition mu;
  int n = 0;
};

/// Strip data of the first-variable reduction of eta; the assembled identity
/// eta_la(x;y) = sum_p x_1^p sum_mu 2^n eta_mu(x~;y) is verified at the
/// workspace truncation before returning.
std::vector<ReduceTerm> reduce_first_variable(const TypedPartition& la, Workspace& ws);

}  // namespace etaforge
