#include "etaforge/sparse_poly.hpp"

#include <algorithm>
#include <sstream>

namespace etaforge {

void require_same_vars(const SparsePoly& a, const SparsePoly& b) {
  if (a.xvars() != b.xvars() || a.yvars() != b.yvars())
    fail(ErrorCode::VarMismatch,
         "polynomials live in different variable sets (" + std::to_string(a.xvars()) + "," +
             std::to_string(a.yvars()) + ") vs (" + std::to_string(b.xvars()) + "," +
             std::to_string(b.yvars()) + ")");
}

SparsePoly SparsePoly::constant(const Rat& c, int m, int ky) {
  SparsePoly p(m, ky);
  if (c != 0) p.add_key(Key(1 + m + ky, 0), c);
  return p;
}

SparsePoly SparsePoly::x_var(int i, int m, int ky) {
  hard_assert(1 <= i && i <= m, "x_var index out of range");
  SparsePoly p(m, ky);
  Key k(1 + m + ky, 0);
  k[0] = 1;
  k[i] = 1;
  p.add_key(std::move(k), Rat(1));
  return p;
}

SparsePoly SparsePoly::y_var(int j, int m, int ky) {
  hard_assert(1 <= j && j <= ky, "y_var index out of range");
  SparsePoly p(m, ky);
  Key k(1 + m + ky, 0);
  k[0] = 1;
  k[m + j] = 1;
  p.add_key(std::move(k), Rat(1));
  return p;
}

int SparsePoly::total_degree() const {
  int d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k[0]));
  return d;
}

SparsePoly::Key SparsePoly::make_key(const std::vector<int>& x_exps,
                                     const std::vector<int>& y_exps) const {
  hard_assert(static_cast<int>(x_exps.size()) <= m_ && static_cast<int>(y_exps.size()) <= ky_,
              "exponent vector longer than variable set");
  Key k(1 + m_ + ky_, 0);
  int deg = 0;
  for (size_t i = 0; i < x_exps.size(); ++i) {
    hard_assert(0 <= x_exps[i] && x_exps[i] < 256, "x exponent out of range");
    k[1 + i] = static_cast<unsigned char>(x_exps[i]);
    deg += x_exps[i];
  }
  for (size_t j = 0; j < y_exps.size(); ++j) {
    hard_assert(0 <= y_exps[j] && y_exps[j] < 256, "y exponent out of range");
    k[1 + m_ + j] = static_cast<unsigned char>(y_exps[j]);
    deg += y_exps[j];
  }
  hard_assert(deg < 256, "total degree out of range");
  k[0] = static_cast<unsigned char>(deg);
  return k;
}

void SparsePoly::add_key(Key k, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(k), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePoly::add_term(const std::vector<int>& x_exps, const std::vector<int>& y_exps,
                          const Rat& c) {
  add_key(make_key(x_exps, y_exps), c);
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require_same_vars(*this, o);
  for (const auto& [k, c] : o.terms_) add_key(k, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require_same_vars(*this, o);
  for (const auto& [k, c] : o.terms_) add_key(k, -c);
  return *this;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  SparsePoly r = *this;
  r += o;
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  SparsePoly r = *this;
  r -= o;
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(m_, ky_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

SparsePoly& SparsePoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  require_same_vars(*this, o);
  SparsePoly r(m_, ky_);
  const size_t n = 1 + m_ + ky_;
  Key k(n, 0);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      int deg = ka[0] + kb[0];
      hard_assert(deg < 256, "product degree out of range");
      for (size_t i = 0; i < n; ++i) k[i] = static_cast<unsigned char>(ka[i] + kb[i]);
      r.add_key(k, ca * cb);
    }
  return r;
}

Rat SparsePoly::coefficient(const std::vector<int>& x_exps,
                            const std::vector<int>& y_exps) const {
  auto it = terms_.find(make_key(x_exps, y_exps));
  return it == terms_.end() ? Rat(0) : it->second;
}

SparsePoly SparsePoly::set_x_zero(int i) const {
  hard_assert(1 <= i && i <= m_, "set_x_zero index out of range");
  SparsePoly r(m_, ky_);
  for (const auto& [k, c] : terms_)
    if (k[i] == 0) r.terms_.emplace(k, c);
  return r;
}

SparsePoly SparsePoly::set_y_zero(int j) const {
  hard_assert(1 <= j && j <= ky_, "set_y_zero index out of range");
  SparsePoly r(m_, ky_);
  for (const auto& [k, c] : terms_)
    if (k[m_ + j] == 0) r.terms_.emplace(k, c);
  return r;
}

SparsePoly SparsePoly::x_constant_part() const {
  SparsePoly r(m_, ky_);
  for (const auto& [k, c] : terms_) {
    bool pure = true;
    for (int i = 1; i <= m_ && pure; ++i) pure = (k[i] == 0);
    if (pure) r.terms_.emplace(k, c);
  }
  return r;
}

SparsePoly SparsePoly::embed(int new_m, int x_offset, int new_ky, int y_offset) const {
  hard_assert(x_offset >= 0 && m_ + x_offset <= new_m, "x embedding does not fit");
  hard_assert(y_offset >= 0 && ky_ + y_offset <= new_ky, "y embedding does not fit");
  SparsePoly r(new_m, new_ky);
  for (const auto& [k, c] : terms_) {
    Key nk(1 + new_m + new_ky, 0);
    nk[0] = k[0];
    for (int i = 1; i <= m_; ++i) nk[x_offset + i] = k[i];
    for (int j = 1; j <= ky_; ++j) nk[new_m + y_offset + j] = k[m_ + j];
    r.terms_.emplace(std::move(nk), c);
  }
  return r;
}

SparsePoly SparsePoly::swap_x(int i, int j) const {
  hard_assert(1 <= i && i <= m_ && 1 <= j && j <= m_, "swap_x index out of range");
  SparsePoly r(m_, ky_);
  for (const auto& [k, c] : terms_) {
    Key nk = k;
    std::swap(nk[i], nk[j]);
    r.add_key(std::move(nk), c);
  }
  return r;
}

SparsePoly SparsePoly::swap_y(int i, int j) const {
  hard_assert(1 <= i && i <= ky_ && 1 <= j && j <= ky_, "swap_y index out of range");
  SparsePoly r(m_, ky_);
  for (const auto& [k, c] : terms_) {
    Key nk = k;
    std::swap(nk[m_ + i], nk[m_ + j]);
    r.add_key(std::move(nk), c);
  }
  return r;
}

bool SparsePoly::is_symmetric_x() const {
  for (int i = 1; i < m_; ++i)
    if (!(swap_x(i, i + 1) == *this)) return false;
  return true;
}

bool SparsePoly::is_symmetric_y() const {
  for (int j = 1; j < ky_; ++j)
    if (!(swap_y(j, j + 1) == *this)) return false;
  return true;
}

SparsePoly SparsePoly::homogeneous_component(int d) const {
  SparsePoly r(m_, ky_);
  for (const auto& [k, c] : terms_)
    if (k[0] == d) r.terms_.emplace(k, c);
  return r;
}

SparsePoly SparsePoly::truncate_degree(int d) const {
  SparsePoly r(m_, ky_);
  for (const auto& [k, c] : terms_)
    if (k[0] <= d) r.terms_.emplace(k, c);
  return r;
}

bool SparsePoly::integral() const {
  for (const auto& [k, c] : terms_)
    if (!is_integer(c)) return false;
  return true;
}

SparsePoly SparsePoly::exact_div_pow2(int e) const {
  SparsePoly r = *this;
  r *= pow2_rat(-e);
  if (!r.integral())
    fail(ErrorCode::NonIntegralDivision,
         "division by 2^" + std::to_string(e) + " left non-integer coefficients");
  return r;
}

std::string SparsePoly::pretty() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::string vars;
    auto emit = [&vars](const char* base, int idx, int e) {
      if (e == 0) return;
      if (!vars.empty()) vars += "*";
      vars += base + std::to_string(idx);
      if (e > 1) vars += "^" + std::to_string(e);
    };
    for (int i = 1; i <= m_; ++i) emit("x", i, k[i]);
    for (int j = 1; j <= ky_; ++j) emit("y", j, k[m_ + j]);
    if (vars.empty()) out << rat_to_string(a);
    else if (a == 1) out << vars;
    else out << rat_to_string(a) << "*" << vars;
  }
  return out.str();
}

}  // namespace etaforge
