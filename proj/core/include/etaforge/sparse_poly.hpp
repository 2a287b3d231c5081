#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "etaforge/numeric.hpp"

namespace etaforge {

/// Number of x variables kept, plus an optional total-degree cap.  Setting
/// x_i = 0 for i > m is a ring map, so identities stay exact under it.
struct Truncation {
  int m = 3;
  std::optional<int> max_degree;
};

/// Exact multivariate polynomial in x_1..x_m and y_1..y_ky with rational
/// coefficients.  Terms are keyed by [total degree | x exponents | y
/// exponents]; the map order (degree ascending, exponents descending) is the
/// canonical serialization order.
class SparsePoly {
 public:
  using Key = std::vector<unsigned char>;

  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      if (a[0] != b[0]) return a[0] < b[0];
      for (size_t i = 1; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
      return false;
    }
  };
  using Terms = std::map<Key, Rat, KeyLess>;

  SparsePoly() = default;
  SparsePoly(int m, int ky) : m_(m), ky_(ky) {}

  static SparsePoly constant(const Rat& c, int m, int ky);
  static SparsePoly one(int m, int ky) { return constant(Rat(1), m, ky); }
  static SparsePoly x_var(int i, int m, int ky);
  static SparsePoly y_var(int j, int m, int ky);

  int xvars() const { return m_; }
  int yvars() const { return ky_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // 0 for the zero polynomial

  void add_term(const std::vector<int>& x_exps, const std::vector<int>& y_exps,
                const Rat& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly operator-() const;
  SparsePoly& operator*=(const Rat& c);
  SparsePoly operator*(const Rat& c) const {
    SparsePoly r = *this;
    r *= c;
    return r;
  }
  friend SparsePoly operator*(const Rat& c, SparsePoly p) { return p *= c, p; }
  bool operator==(const SparsePoly& o) const = default;

  Rat coefficient(const std::vector<int>& x_exps, const std::vector<int>& y_exps) const;

  /// Substitute x_i = 0 (1-based).
  SparsePoly set_x_zero(int i) const;
  SparsePoly set_y_zero(int j) const;
  /// Keep only terms with every x exponent zero.
  SparsePoly x_constant_part() const;

  /// Reinterpret in a larger variable set, shifting x (resp. y) indices up
  /// by x_offset (resp. y_offset).
  SparsePoly embed(int new_m, int x_offset, int new_ky, int y_offset) const;

  SparsePoly swap_x(int i, int j) const;
  SparsePoly swap_y(int i, int j) const;
  bool is_symmetric_x() const;
  bool is_symmetric_y() const;

  SparsePoly homogeneous_component(int d) const;
  SparsePoly truncate_degree(int d) const;

  bool integral() const;  // every coefficient an integer

  /// Multiply by 2^-e and demand integer coefficients afterwards.
  SparsePoly exact_div_pow2(int e) const;

  std::string pretty() const;

 private:
  Key make_key(const std::vector<int>& x_exps, const std::vector<int>& y_exps) const;
  void add_key(Key k, const Rat& c);

  int m_ = 0;
  int ky_ = 0;
  Terms terms_;
};

void require_same_vars(const SparsePoly& a, const SparsePoly& b);

}  // namespace etaforge
