#pragma once

#include <map>
#include <utility>
#include <vector>

#include "etaforge/numeric.hpp"
#include "etaforge/partition_core.hpp"

namespace etaforge {

/// A finite product of raising-operator factors over positions 1..nrows:
/// (1-R_ij)/(1+R_ij) for pairs in inverse_pairs, (1-R_ij) for plain_pairs.
struct OperatorSpec {
  int nrows = 0;
  std::vector<std::pair<int, int>> inverse_pairs;
  std::vector<std::pair<int, int>> plain_pairs;

  void validate() const;

  /// Giambelli operator: inverted factors on the valid pair set of λ,
  /// plain factors on every other pair with j <= len(λ).
  static OperatorSpec giambelli(const Partition& la, int k);

  /// Theta-polynomial variant: inverted where λ_i + λ_j > 2k + j - i.
  static OperatorSpec theta_series(const Partition& la, int k);

  /// Schur Q operator: every pair inverted.
  static OperatorSpec schur_q_series(int len);

  /// First-row Pieri expansion: positions 1..len(λ)+1, plain factors only
  /// among the first len(λ) rows (the factors into the new row cancel
  /// against the multiplier series).
  static OperatorSpec pieri_row(const Partition& la, int k);
};

/// Finite signed expansion of an operator series against a composition.
/// Keys are sorted-descending, trimmed exponent vectors: the underlying
/// c_α are commutative monomials, so order carries no information.
struct OperatorExpansion {
  std::map<std::vector<int>, Int> terms;

  bool operator==(const OperatorExpansion&) const = default;
};

/// Expand spec against alpha; terms whose final composition has a negative
/// entry vanish.  alpha may contain negative entries (they must be raised
/// back above zero to survive).
OperatorExpansion expand(const OperatorSpec& spec, std::vector<int> alpha,
                         const Budget& budget = {});

/// Star-action split of the Giambelli expansion of a positive-type λ:
/// monomials avoiding the index of the part equal to k land in `plain`
/// (recorded with that slot deleted); the rest land in `m_involved` and are
/// weighted 1/2 downstream.
struct StarExpansion {
  OperatorExpansion plain;
  OperatorExpansion m_involved;
};

StarExpansion expand_star(const TypedPartition& la, const Budget& budget = {});

}  // namespace etaforge
