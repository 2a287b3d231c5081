#pragma once

#include <string>
#include <vector>

#include "etaforge/strips_pieri.hpp"
#include "etaforge/symfunc.hpp"

namespace etaforge {

/// A typed tableau is a chain of typed partitions; the box filling with
/// entries i / i-circled is derived from it.
struct TypedTableau {
  std::vector<TypedPartition> chain;  // chain.front() = inner shape, back() = outer

  const TypedPartition& inner() const { return chain.front(); }
  const TypedPartition& outer() const { return chain.back(); }
  int max_entry() const { return static_cast<int>(chain.size()) - 1; }

  /// Sum of the typed strip statistics along the chain.
  int n_stat() const;
  /// Count of entries equal to i (or i-circled), 1-based.
  std::vector<int> entry_counts() const;

  bool operator==(const TypedTableau&) const = default;
};

struct TypedBitableau {
  /// marked[r] lists the marked values in row r+1 of the inner shape
  /// (strictly increasing per row).
  std::vector<std::vector<int>> marked;
  TypedTableau tableau;

  int n_stat() const { return tableau.n_stat(); }
  std::vector<int> mark_counts(int k) const;
};

/// All typed tableaux of shape la/mu with entries bounded by max_entry
/// (unused entry values are allowed).
std::vector<TypedTableau> enumerate_typed_tableaux(const TypedPartition& la,
                                                   const TypedPartition& mu, int max_entry);

/// All typed bitableaux of shape la with unmarked entries <= max_unmarked.
std::vector<TypedBitableau> enumerate_bitableaux(const TypedPartition& la, int max_unmarked);

/// All standard typed tableaux on la/mu (one box per chain step).
std::vector<TypedTableau> enumerate_standard(const TypedPartition& la,
                                             const TypedPartition& mu);

/// Skew function: sum of 2^{n(T)} x^T over typed tableaux with entries <= m.
SparsePoly e_skew(const TypedPartition& la, const TypedPartition& mu, Workspace& ws);

/// Eta polynomial assembled from the bitableau formula (tableau route).
SparsePoly eta_via_tableaux(const TypedPartition& la, Workspace& ws);

TypedTableau j_involution(const TypedTableau& t);

/// Paper-style grid: marked entries "2'", circled "3o", plain "1".
std::string render_tableau(const TypedTableau& t);
std::string render_bitableau(const TypedBitableau& u);

}  // namespace etaforge
