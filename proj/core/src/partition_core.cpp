#include "etaforge/partition_core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace etaforge {

std::vector<int> trimmed(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

long long seq_sum(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0LL);
}

int seq_nonzero_count(const std::vector<int>& v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }));
}

int seq_length(const std::vector<int>& v) {
  for (int i = static_cast<int>(v.size()); i > 0; --i)
    if (v[i - 1] != 0) return i;
  return 0;
}

Partition::Partition(std::vector<int> parts) : parts_(trimmed(std::move(parts))) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    int p = parts_[i];
    hard_assert(p > 0, "partition parts must be positive after trimming");
    if (i + 1 < parts_.size())
      hard_assert(p >= parts_[i + 1], "partition parts must be weakly decreasing");
  }
}

long long Partition::size() const { return seq_sum(parts_); }

int Partition::part(int i) const {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

int Partition::column_height(int c) const {
  int h = 0;
  for (int p : parts_)
    if (p >= c) ++h;
    else break;
  return h;
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > part(i)) return false;
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  int cols = part(1);
  conj.reserve(cols);
  for (int c = 1; c <= cols; ++c) conj.push_back(column_height(c));
  return Partition(std::move(conj));
}

bool Partition::has_part(int v) const {
  return std::find(parts_.begin(), parts_.end(), v) != parts_.end();
}

Partition Partition::remove_part(int v) const {
  auto ps = parts_;
  auto it = std::find(ps.begin(), ps.end(), v);
  hard_assert(it != ps.end(), "remove_part: no such part");
  ps.erase(it);
  return Partition(std::move(ps));
}

bool is_k_strict(const Partition& p, int k) {
  for (int i = 1; i < p.length(); ++i)
    if (p.part(i) == p.part(i + 1) && p.part(i) > k) return false;
  return true;
}

int k_length(const Partition& p, int k) {
  int n = 0;
  for (int part : p.parts())
    if (part > k) ++n;
  return n;
}

TypedPartition validate_typed(std::vector<int> parts, int k, int type) {
  if (k <= 0) fail(ErrorCode::BadType, "k must be positive");
  parts = trimmed(std::move(parts));
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) fail(ErrorCode::NotKStrict, "parts must be positive");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      fail(ErrorCode::NotKStrict, "parts must be weakly decreasing");
  }
  Partition shape(parts);
  if (!is_k_strict(shape, k))
    fail(ErrorCode::NotKStrict,
         "repeated part > " + std::to_string(k) + " in " + partition_literal(shape));
  if (type < 0 || type > 2) fail(ErrorCode::BadType, "type must be 0, 1 or 2");
  bool part_k = shape.has_part(k);
  if (part_k && type == 0)
    fail(ErrorCode::BadType, "a part equals k; type must be positive");
  if (!part_k && type > 0)
    fail(ErrorCode::BadType, "no part equals k; type must be 0");
  return TypedPartition{std::move(shape), k, type};
}

int k_length(const TypedPartition& la) { return k_length(la.shape, la.k); }

TypedPartition j_involution(const TypedPartition& la) {
  TypedPartition out = la;
  if (out.type == 1) out.type = 2;
  else if (out.type == 2) out.type = 1;
  return out;
}

std::set<std::pair<int, int>> c_set(const Partition& la, int k) {
  std::set<std::pair<int, int>> pairs;
  int len = la.length();
  for (int i = 1; i < len; ++i)
    for (int j = i + 1; j <= len; ++j)
      if (la.part(i) + la.part(j) >= 2 * k + j - i) pairs.insert({i, j});
  // order ideal of {(i,j) : i<j}
  for (auto [i, j] : pairs)
    for (int i2 = 1; i2 <= i; ++i2)
      for (int j2 = i2 + 1; j2 <= j; ++j2)
        hard_assert(pairs.count({i2, j2}) > 0, "c_set is not an order ideal");
  return pairs;
}

std::set<std::pair<int, int>> c_set(const TypedPartition& la) {
  return c_set(la.shape, la.k);
}

bool is_k_prime_related(const Box& a, const Box& b, int k) {
  const Box* left = &a;
  const Box* right = &b;
  if (left->col > k) std::swap(left, right);
  if (left->col > k) fail(ErrorCode::BothRight, "both boxes lie beyond column k");
  if (right->col <= k) fail(ErrorCode::BothLeft, "both boxes lie in the first k columns");
  return left->col + right->col == 2 * k + 1 + left->row - right->row;
}

bool is_k_dblprime_related(const Box& a, const Box& b, int k) {
  auto depth = [k](const Box& x) { return std::abs(x.col - k) + x.row; };
  return depth(a) == depth(b);
}

// --- literals -------------------------------------------------------------

Partition parse_partition(const std::string& text) {
  std::string s = text;
  if (s == "()" || s == "-") s.clear();
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad partition part '" + item + "'");
    }
  }
  parts = trimmed(std::move(parts));
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) fail(ErrorCode::ParseError, "partition parts must be positive");
    if (i + 1 < parts.size() && parts[i] < parts[i + 1])
      fail(ErrorCode::ParseError, "partition parts must be weakly decreasing");
  }
  return Partition(std::move(parts));
}

std::string partition_literal(const Partition& p) {
  if (p.empty()) return "()";
  std::string out;
  for (int i = 1; i <= p.length(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(p.part(i));
  }
  return out;
}

TypedPartition parse_typed_partition(const std::string& text,
                                     std::optional<int> default_k,
                                     std::optional<int> default_type) {
  std::vector<std::string> fields;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) fields.push_back(item);
  if (fields.empty()) fields.push_back("");

  std::optional<int> k = default_k;
  std::optional<int> type = default_type;
  for (size_t i = 1; i < fields.size(); ++i) {
    const std::string& f = fields[i];
    auto eq = f.find('=');
    if (eq == std::string::npos) fail(ErrorCode::ParseError, "bad field '" + f + "'");
    std::string key = f.substr(0, eq);
    std::string val = f.substr(eq + 1);
    try {
      if (key == "k") k = std::stoi(val);
      else if (key == "type") type = std::stoi(val);
      else fail(ErrorCode::ParseError, "unknown field '" + key + "'");
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad value '" + val + "' for '" + key + "'");
    }
  }
  if (!k) fail(ErrorCode::ParseError, "no k given (use ':k=...' or --k)");
  Partition shape = parse_partition(fields[0]);
  if (!type) {
    if (shape.has_part(*k))
      fail(ErrorCode::BadType,
           "type is ambiguous for '" + text + "' (a part equals k); add ':type=1' or ':type=2'");
    type = 0;
  }
  std::vector<int> parts(shape.parts());
  return validate_typed(std::move(parts), *k, *type);
}

std::string typed_partition_literal(const TypedPartition& la) {
  return partition_literal(la.shape) + ":k=" + std::to_string(la.k) +
         ":type=" + std::to_string(la.type);
}

// --- enumeration ----------------------------------------------------------

namespace {

void gen_partitions(int remaining, int max_part, int max_rows, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_rows == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, max_rows - 1, cur, out);
    cur.pop_back();
  }
}

void gen_k_strict(int remaining, int max_part, int max_rows, int k, std::vector<int>& cur,
                  std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_rows == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (!cur.empty() && cur.back() == p && p > k) continue;
    cur.push_back(p);
    gen_k_strict(remaining - p, p, max_rows - 1, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_rows) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(n, max_part, max_rows, cur, out);
  return out;
}

std::vector<Partition> k_strict_partitions_of(int n, int k, int max_part, int max_rows) {
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_k_strict(n, max_part, max_rows, k, cur, out);
  return out;
}

std::vector<Partition> k_strict_partitions_up_to(int max_size, int k) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto batch = k_strict_partitions_of(n, k, n, n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<TypedPartition> typed_versions(const Partition& shape, int k) {
  std::vector<TypedPartition> out;
  if (shape.has_part(k)) {
    out.push_back(TypedPartition{shape, k, 1});
    out.push_back(TypedPartition{shape, k, 2});
  } else {
    out.push_back(TypedPartition{shape, k, 0});
  }
  return out;
}

std::vector<TypedPartition> typed_partitions_up_to(int max_size, int k) {
  std::vector<TypedPartition> out;
  for (const auto& shape : k_strict_partitions_up_to(max_size, k)) {
    auto tv = typed_versions(shape, k);
    out.insert(out.end(), tv.begin(), tv.end());
  }
  return out;
}

bool fits_in_rect(const Partition& p, int rows, int cols) {
  return p.length() <= rows && p.part(1) <= cols;
}

std::vector<TypedPartition> ptilde(int k, int n) {
  hard_assert(k >= 1 && k <= n, "ptilde: need 1 <= k <= n");
  std::vector<TypedPartition> out;
  int rows = n + 1 - k, cols = n + k;
  for (int sz = 0; sz <= rows * cols; ++sz)
    for (const auto& shape : k_strict_partitions_of(sz, k, cols, rows)) {
      auto tv = typed_versions(shape, k);
      out.insert(out.end(), tv.begin(), tv.end());
    }
  return out;
}

std::vector<Partition> k_strict_between(const Partition& mu, const Partition& la,
                                        long long size, int k) {
  std::vector<Partition> out;
  if (size < mu.size() || size > la.size() || !la.contains(mu)) return out;
  struct Rec {
    const Partition& mu;
    const Partition& la;
    int k;
    std::vector<Partition>& out;
    std::vector<int> cur;
    void go(long long remaining, int row, int prev) {
      if (remaining == 0) {
        for (int r = row; r <= mu.length(); ++r)
          if (mu.part(r) > 0) return;
        out.emplace_back(cur);
        return;
      }
      if (row > la.length()) return;
      int lo = mu.part(row);
      long long hi = std::min<long long>(std::min(la.part(row), prev), remaining);
      for (long long v = hi; v >= std::max(lo, 1); --v) {
        if (!cur.empty() && cur.back() == v && v > k) continue;
        cur.push_back(static_cast<int>(v));
        go(remaining - v, row + 1, static_cast<int>(v));
        cur.pop_back();
      }
    }
  } rec{mu, la, k, out, {}};
  rec.go(size, 1, la.part(1));
  return out;
}

}  // namespace etaforge
