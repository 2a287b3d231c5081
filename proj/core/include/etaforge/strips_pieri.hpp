#pragma once

#include <optional>
#include <vector>

#include "etaforge/partition_core.hpp"

namespace etaforge {

/// One target of the Pieri product w_p * W_la, with its component count N
/// and multiplicity exponent M.
struct PieriStep {
  Partition target;
  int n_comp = 0;
  int exponent = 0;
};

/// Outcome of testing the Pieri relation la -> mu.
struct PieriRelation {
  bool related = false;
  int n_comp = 0;
  int exponent = 0;
};

/// Test la -> mu at level k: mu arises by removing a vertical strip from the
/// first k columns and adding a horizontal strip, subject to the matching
/// conditions on k'-related boxes; N and M are computed when it holds.
PieriRelation pieri_relation(const Partition& la, const Partition& mu, int k);

/// All mu with la -> mu and |mu| = |la| + p.
std::vector<PieriStep> pieri_steps(const Partition& la, int p, int k);

/// k'-horizontal strip test via two independent routes: the Pieri relation
/// la -> (p+r, mu) with p = |la| + 2k, and the rim/k''-related-box
/// characterization.  Disagreement is an implementation bug.
bool is_kprime_strip(const Partition& la, const Partition& mu, int k);

/// Multiplicity exponent m(la/mu), through the Pieri route.
int strip_m(const Partition& la, const Partition& mu, int k);

struct StripStats {
  int m_stat = 0;
  int n_hat = 0;
  int n_typed = 0;
  bool is_typed_strip = false;
};

/// Statistics of a typed strip; n_typed is meaningful only when
/// is_typed_strip holds.
StripStats strip_stats(const TypedPartition& la, const TypedPartition& mu);

/// Direct component count N(A) of the unmatched right-boundary boxes,
/// including the row-zero ray (its infinite tail counts as one component).
/// Cross-check for the Pieri route; std::nullopt when la/mu is not a strip.
std::optional<int> strip_na_direct(const Partition& la, const Partition& mu, int k);

struct TypedStrip {
  TypedPartition mu;
  int n = 0;  // n(la/mu)
};

/// All typed mu with mu => la and |mu| = size.
std::vector<TypedStrip> typed_strips_below(const TypedPartition& la, long long size);

/// All typed nu with sigma => nu, nu inside the bound shape, |nu| = size.
std::vector<TypedStrip> typed_strips_above(const TypedPartition& sigma,
                                           const Partition& bound, long long size);

}  // namespace etaforge
