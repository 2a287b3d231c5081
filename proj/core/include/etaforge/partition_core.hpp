#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "etaforge/errors.hpp"

namespace etaforge {

// Integer sequences with finitely many nonzero entries are plain vectors.
// Entries may go negative while raising operators act on them; equality is
// always on the trailing-zero-trimmed form.

std::vector<int> trimmed(std::vector<int> v);
long long seq_sum(const std::vector<int>& v);
int seq_nonzero_count(const std::vector<int>& v);
int seq_length(const std::vector<int>& v);  // index of last nonzero entry

/// Weakly decreasing sequence of positive parts, stored trimmed.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  long long size() const;          // |λ|
  int part(int i) const;           // 1-based; 0 beyond the last row
  int column_height(int c) const;  // λ'_c, 1-based
  bool empty() const { return parts_.empty(); }
  bool contains(const Partition& mu) const;
  Partition conjugate() const;
  bool has_part(int v) const;
  /// λ with one occurrence of the part v removed.
  Partition remove_part(int v) const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

bool is_k_strict(const Partition& p, int k);

/// Number of parts strictly greater than k.
int k_length(const Partition& p, int k);

/// k-strict partition with a type marker; the marker is positive exactly
/// when some part equals k.
struct TypedPartition {
  Partition shape;
  int k = 1;
  int type = 0;

  long long size() const { return shape.size(); }
  bool positive_type() const { return type > 0; }
  auto operator<=>(const TypedPartition&) const = default;
};

/// Validates and builds a TypedPartition.
TypedPartition validate_typed(std::vector<int> parts, int k, int type);

int k_length(const TypedPartition& la);

/// Swap type 1 and type 2; identity on type 0.
TypedPartition j_involution(const TypedPartition& la);

/// [r,c]; row 0 is allowed where the strip machinery needs it.
struct Box {
  int row = 0;
  int col = 1;
  auto operator<=>(const Box&) const = default;
};

/// Pairs (i,j), i<j, whose Giambelli factors are inverted.
std::set<std::pair<int, int>> c_set(const TypedPartition& la);
std::set<std::pair<int, int>> c_set(const Partition& la, int k);

/// One box in the first k columns, one strictly beyond; order is sorted out
/// internally.  True when c + c' = 2k + 1 + r - r'.
bool is_k_prime_related(const Box& a, const Box& b, int k);

/// |c-k| + r = |c'-k| + r'; no column restrictions.
bool is_k_dblprime_related(const Box& a, const Box& b, int k);

// --- literals -------------------------------------------------------------

/// "8,4,3,2" or "()" / "" for the empty partition.
Partition parse_partition(const std::string& text);
std::string partition_literal(const Partition& p);

/// "8,4,3,2:k=3:type=1".  Missing k/type fall back to the supplied defaults;
/// a positive-type shape with no explicit type is rejected as ambiguous.
TypedPartition parse_typed_partition(const std::string& text,
                                     std::optional<int> default_k = std::nullopt,
                                     std::optional<int> default_type = std::nullopt);
std::string typed_partition_literal(const TypedPartition& la);

// --- enumeration ----------------------------------------------------------

/// All partitions of n with parts <= max_part and at most max_rows rows.
std::vector<Partition> partitions_of(int n, int max_part, int max_rows);

/// All k-strict partitions of n (parts <= max_part, rows <= max_rows).
std::vector<Partition> k_strict_partitions_of(int n, int k, int max_part, int max_rows);

/// All k-strict partitions with |λ| <= max_size.
std::vector<Partition> k_strict_partitions_up_to(int max_size, int k);

/// Typed versions of one shape: both positive types when a part equals k,
/// type 0 otherwise.
std::vector<TypedPartition> typed_versions(const Partition& shape, int k);

/// All typed k-strict partitions with |λ| <= max_size.
std::vector<TypedPartition> typed_partitions_up_to(int max_size, int k);

bool fits_in_rect(const Partition& p, int rows, int cols);

/// Typed k-strict partitions inside the (n+1-k) x (n+k) rectangle.
std::vector<TypedPartition> ptilde(int k, int n);

/// All k-strict partitions nested between mu and lambda with the given size.
std::vector<Partition> k_strict_between(const Partition& mu, const Partition& la,
                                        long long size, int k);

}  // namespace etaforge
