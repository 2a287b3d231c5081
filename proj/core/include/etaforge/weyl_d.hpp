#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "etaforge/symfunc.hpp"
#include "etaforge/tableaux.hpp"

namespace etaforge {

/// Element of the type D Weyl group on {1..n+1}: one-line notation with
/// signs, an even number of them negative.
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> images);
  static SignedPermutation identity(int n_plus_1);

  int size() const { return static_cast<int>(img_.size()); }
  /// Signed image of i; i may be negative (w(-i) = -w(i)).
  int operator()(int i) const;
  const std::vector<int>& images() const { return img_; }

  SignedPermutation operator*(const SignedPermutation& v) const;  // (uv)(i) = u(v(i))
  SignedPermutation inverse() const;

  /// Right action: position swap for i >= 1, the bar-swap of the first two
  /// entries for i = 0.
  SignedPermutation right_mul_s(int i) const;
  /// Left action on values.
  SignedPermutation left_mul_s(int i) const;

  bool right_ascent(int i) const;  // l(w s_i) = l(w) + 1
  int length() const;              // inversions plus negative-sum pairs
  bool is_identity() const;

  /// Minimal-length embedding into a larger group (fixed new points).
  SignedPermutation extended(int n_plus_1) const;

  auto operator<=>(const SignedPermutation&) const = default;

  std::string to_string() const;  // "3,-4,-2,1"
  static SignedPermutation parse(const std::string& text);

 private:
  std::vector<int> img_;
};

int length_bfs(const SignedPermutation& w);  // oracle: breadth-first from identity

std::vector<std::vector<int>> reduced_words(const SignedPermutation& w);

/// k-Grassmannian element of a typed k-strict partition inside the
/// (n+1-k) x (n+k) rectangle, built from the diagonal lengths of the
/// staircase complement.
SignedPermutation grassmannian_element(const TypedPartition& la, int n);

/// Lookup table w_la -> la over all of ptilde(k, n).
class GrassmannianIndex {
 public:
  GrassmannianIndex(int k, int n);
  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<TypedPartition>& partitions() const { return order_; }
  std::optional<TypedPartition> find(const SignedPermutation& w) const;
  const SignedPermutation& element(const TypedPartition& la) const;

 private:
  int k_, n_;
  std::vector<TypedPartition> order_;
  std::map<TypedPartition, SignedPermutation> by_partition_;
  std::map<SignedPermutation, TypedPartition> by_element_;
};

// --- nilCoxeter algebra -----------------------------------------------------

/// Basis-indexed coefficients of a nilCoxeter algebra element.
using NilCoxeterElement = std::map<SignedPermutation, SparsePoly>;

/// state := state * (1 + t u_gen), dropping anything longer than lmax.
void nilcox_apply_factor(NilCoxeterElement& state, int gen, const SparsePoly& t, int lmax,
                         long long& ops, const Budget& budget);

/// Product D(x_1)...D(x_nx) in the nilCoxeter algebra of W_{n+1};
/// coefficients live in (nx, ky_dims) variables.
NilCoxeterElement nilcox_d_product(int n, int nx, int ky_dims, int lmax,
                                   const Budget& budget);

/// D(x_1)...D(x_nx) A_1(y_1)...A_n(y_n); coefficients in (nx, n) variables.
NilCoxeterElement nilcox_ds_product(int n, int nx, int lmax, const Budget& budget);

/// Type D Stanley symmetric function, an (m, 0)-variable polynomial.
SparsePoly stanley_e(const SignedPermutation& w, int m, const Budget& budget = {});

/// Billey-Haiman Schubert polynomial in x_1..x_m, y_1..y_n.
SparsePoly schubert_ds(const SignedPermutation& w, int n, int m, const Budget& budget = {});

// --- skew elements ----------------------------------------------------------

struct SkewWitness {
  int k = 0;
  TypedPartition la;
  TypedPartition mu;
};

/// First (k, la, mu) with w_la = w * w_mu reduced, searching k ascending and
/// partitions in ptilde order; nullopt when w is not skew in W_{n+1}.
std::optional<SkewWitness> is_skew(const SignedPermutation& w, int n);

bool compatible_pair(const TypedPartition& la, const TypedPartition& mu, int n);

/// Chain built by reading a reduced word for w_la w_mu^{-1} right to left.
TypedTableau word_to_tableau(const std::vector<int>& word, const TypedPartition& la,
                             const TypedPartition& mu);
std::vector<int> tableau_to_word(const TypedTableau& t);

/// Swap letters 0 and 1.
std::vector<int> iota(const std::vector<int>& word);

/// Deterministic listing: lengths ascending, then one-line order.
std::vector<SignedPermutation> all_elements(int n_plus_1);

}  // namespace etaforge
