#include "etaforge/weyl_d.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

namespace etaforge {

SignedPermutation::SignedPermutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size() + 1, false);
  int bars = 0;
  for (int v : img_) {
    int a = std::abs(v);
    hard_assert(a >= 1 && a <= static_cast<int>(img_.size()) && !seen[a],
                "signed permutation images must cover 1..n+1");
    seen[a] = true;
    if (v < 0) ++bars;
  }
  hard_assert(bars % 2 == 0, "type D needs an even number of barred entries");
}

SignedPermutation SignedPermutation::identity(int n_plus_1) {
  std::vector<int> img(n_plus_1);
  for (int i = 0; i < n_plus_1; ++i) img[i] = i + 1;
  return SignedPermutation(std::move(img));
}

int SignedPermutation::operator()(int i) const {
  if (i < 0) return -(*this)(-i);
  hard_assert(i >= 1 && i <= size(), "image index out of range");
  return img_[i - 1];
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& v) const {
  hard_assert(size() == v.size(), "group size mismatch");
  std::vector<int> img(size());
  for (int i = 1; i <= size(); ++i) img[i - 1] = (*this)(v(i));
  return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> img(size());
  for (int i = 1; i <= size(); ++i) {
    int v = img_[i - 1];
    if (v > 0) img[v - 1] = i;
    else img[-v - 1] = -i;
  }
  return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::right_mul_s(int i) const {
  std::vector<int> img = img_;
  if (i == 0) {
    hard_assert(size() >= 2, "s_0 needs at least two entries");
    int a = img[0], b = img[1];
    img[0] = -b;
    img[1] = -a;
  } else {
    hard_assert(i >= 1 && i + 1 <= size(), "generator index out of range");
    std::swap(img[i - 1], img[i]);
  }
  return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::left_mul_s(int i) const {
  std::vector<int> img = img_;
  if (i == 0) {
    for (int& v : img) {
      if (v == 1) v = -2;
      else if (v == -1) v = 2;
      else if (v == 2) v = -1;
      else if (v == -2) v = 1;
    }
  } else {
    hard_assert(i >= 1 && i + 1 <= size(), "generator index out of range");
    for (int& v : img) {
      if (v == i) v = i + 1;
      else if (v == i + 1) v = i;
      else if (v == -i) v = -(i + 1);
      else if (v == -(i + 1)) v = -i;
    }
  }
  return SignedPermutation(std::move(img));
}

bool SignedPermutation::right_ascent(int i) const {
  if (i == 0) return img_[0] + img_[1] > 0;
  return img_[i - 1] < img_[i];
}

int SignedPermutation::length() const {
  int inv = 0, neg = 0;
  int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (img_[i] > img_[j]) ++inv;
      if (img_[i] + img_[j] < 0) ++neg;
    }
  return inv + neg;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

SignedPermutation SignedPermutation::extended(int n_plus_1) const {
  hard_assert(n_plus_1 >= size(), "cannot shrink a signed permutation");
  std::vector<int> img = img_;
  for (int i = size(); i < n_plus_1; ++i) img.push_back(i + 1);
  return SignedPermutation(std::move(img));
}

std::string SignedPermutation::to_string() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ',';
    out += std::to_string(img_[i]);
  }
  return out;
}

SignedPermutation SignedPermutation::parse(const std::string& text) {
  std::vector<int> img;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t pos = 0;
      img.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad signed permutation entry '" + item + "'");
    }
  }
  if (img.empty()) fail(ErrorCode::ParseError, "empty signed permutation");
  try {
    return SignedPermutation(std::move(img));
  } catch (const DomainError&) {
    fail(ErrorCode::ParseError, "'" + text + "' is not a type D signed permutation");
  }
}

int length_bfs(const SignedPermutation& w) {
  if (w.is_identity()) return 0;
  int n = w.size() - 1;
  std::map<SignedPermutation, int> dist;
  std::deque<SignedPermutation> queue;
  SignedPermutation id = SignedPermutation::identity(w.size());
  dist[id] = 0;
  queue.push_back(id);
  while (!queue.empty()) {
    SignedPermutation cur = queue.front();
    queue.pop_front();
    int d = dist[cur];
    for (int i = 0; i <= n; ++i) {
      SignedPermutation next = cur.right_mul_s(i);
      if (dist.emplace(next, d + 1).second) {
        if (next == w) return d + 1;
        queue.push_back(next);
      }
    }
  }
  hard_assert(false, "breadth-first search missed the element");
  return -1;
}

std::vector<std::vector<int>> reduced_words(const SignedPermutation& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  int n = w.size() - 1;
  std::function<void(const SignedPermutation&)> go = [&](const SignedPermutation& v) {
    if (v.is_identity()) {
      out.emplace_back(cur.rbegin(), cur.rend());
      return;
    }
    for (int i = 0; i <= n; ++i) {
      if (v.right_ascent(i)) continue;
      cur.push_back(i);
      go(v.right_mul_s(i));
      cur.pop_back();
    }
  };
  go(w);
  std::sort(out.begin(), out.end());
  return out;
}

// --- Grassmannian elements --------------------------------------------------

SignedPermutation grassmannian_element(const TypedPartition& la, int n) {
  int k = la.k;
  if (!(k >= 1 && k <= n)) fail(ErrorCode::DoesNotFit, "need 1 <= k <= n");
  if (!fits_in_rect(la.shape, n + 1 - k, n + k))
    fail(ErrorCode::DoesNotFit, typed_partition_literal(la) + " does not fit in the " +
                                    std::to_string(n + 1 - k) + "x" + std::to_string(n + k) +
                                    " rectangle");

  // Diagonal d (= row + col) of the staircase complement of la; the
  // staircase row i occupies columns k+1 .. k+n+1-i.
  auto diag_len = [&](int d) {
    int len = 0;
    for (int r = 1; r <= n; ++r) {
      int c = d - r;
      if (c < k + 1 || c > k + n + 1 - r) continue;
      if (la.shape.part(r) < c) ++len;
    }
    return len;
  };

  // Diagonals hooked to the bottom boxes of the first k columns (row zero
  // when the column is empty).
  std::set<int> related_d;
  for (int c = 1; c <= k; ++c) related_d.insert(2 * k + 1 + la.shape.column_height(c) - c);

  std::vector<int> u;
  for (int d : related_d) u.push_back(d == k + 1 ? 0 : diag_len(d));
  std::sort(u.begin(), u.end());
  hard_assert(static_cast<int>(u.size()) == k, "expected k related diagonals");
  for (size_t i = 0; i + 1 < u.size(); ++i)
    hard_assert(u[i] < u[i + 1], "related diagonal lengths must be distinct");
  hard_assert((u[0] == 0) == (la.type == 0), "zero related diagonal iff type 0");

  std::vector<int> v;
  for (int d = k + 2; d <= k + n + 1; ++d) {
    if (related_d.count(d)) continue;
    int len = diag_len(d);
    if (len > 0) v.push_back(len);
  }
  std::sort(v.begin(), v.end());

  int r = k_length(la);
  std::vector<int> la1;  // strict partition beyond the first k columns
  for (int i = 1; i <= r; ++i) la1.push_back(la.shape.part(i) - k);

  std::vector<int> img;
  if (la.type != 0) {
    hard_assert(static_cast<int>(v.size()) == n - k - r, "non-related diagonal count");
    for (int x : u) img.push_back(x + 1);
    if (la.type == 2) img[0] = -img[0];
    for (int x : la1) img.push_back(-(x + 1));
    img.push_back(1);  // placeholder for the parity-fixed 1
    for (int x : v) img.push_back(x + 1);
  } else {
    hard_assert(static_cast<int>(v.size()) == n + 1 - k - r, "non-related diagonal count");
    img.push_back(1);  // placeholder
    for (size_t i = 1; i < u.size(); ++i) img.push_back(u[i] + 1);
    for (int x : la1) img.push_back(-(x + 1));
    for (int x : v) img.push_back(x + 1);
  }
  int slot = (la.type != 0) ? k + r : 0;
  int bars = static_cast<int>(std::count_if(img.begin(), img.end(), [](int x) { return x < 0; }));
  if (bars % 2 == 1) img[slot] = -img[slot];

  SignedPermutation w{std::move(img)};
  hard_assert(w.length() == la.size(), "Grassmannian element has wrong length");
  for (int i = 0; i <= n; ++i) {
    if (i == k) continue;
    if (k == 1 && i == 0) continue;
    hard_assert(w.right_ascent(i), "Grassmannian element has an unexpected descent");
  }
  return w;
}

GrassmannianIndex::GrassmannianIndex(int k, int n) : k_(k), n_(n) {
  order_ = ptilde(k, n);
  for (const auto& la : order_) {
    SignedPermutation w = grassmannian_element(la, n);
    by_partition_.emplace(la, w);
    bool fresh = by_element_.emplace(w, la).second;
    hard_assert(fresh, "two typed partitions share a Grassmannian element");
  }
}

std::optional<TypedPartition> GrassmannianIndex::find(const SignedPermutation& w) const {
  auto it = by_element_.find(w);
  if (it == by_element_.end()) return std::nullopt;
  return it->second;
}

const SignedPermutation& GrassmannianIndex::element(const TypedPartition& la) const {
  auto it = by_partition_.find(la);
  hard_assert(it != by_partition_.end(), "partition missing from Grassmannian index");
  return it->second;
}

// --- nilCoxeter products ----------------------------------------------------

void nilcox_apply_factor(NilCoxeterElement& state, int gen, const SparsePoly& t, int lmax,
                         long long& ops, const Budget& budget) {
  std::vector<std::pair<SignedPermutation, SparsePoly>> adds;
  for (const auto& [w, c] : state) {
    if (++ops > budget.visits)
      fail(ErrorCode::BudgetExceeded, "nilCoxeter product exceeded the visit budget");
    if (!w.right_ascent(gen)) continue;
    if (w.length() + 1 > lmax) continue;
    adds.emplace_back(w.right_mul_s(gen), t * c);
  }
  for (auto& [w, c] : adds) {
    auto [it, inserted] = state.emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) state.erase(it);
    }
  }
}

namespace {

std::vector<int> d_factor_gens(int n) {
  std::vector<int> gens;
  for (int i = n; i >= 2; --i) gens.push_back(i);
  gens.push_back(1);
  gens.push_back(0);
  for (int i = 2; i <= n; ++i) gens.push_back(i);
  return gens;
}

}  // namespace

NilCoxeterElement nilcox_d_product(int n, int nx, int ky_dims, int lmax,
                                   const Budget& budget) {
  NilCoxeterElement state;
  state.emplace(SignedPermutation::identity(n + 1), SparsePoly::one(nx, ky_dims));
  long long ops = 0;
  auto gens = d_factor_gens(n);
  for (int var = 1; var <= nx; ++var) {
    SparsePoly t = SparsePoly::x_var(var, nx, ky_dims);
    for (int g : gens) nilcox_apply_factor(state, g, t, lmax, ops, budget);
  }
  return state;
}

NilCoxeterElement nilcox_ds_product(int n, int nx, int lmax, const Budget& budget) {
  NilCoxeterElement state = nilcox_d_product(n, nx, n, lmax, budget);
  long long ops = 0;
  for (int i = 1; i <= n; ++i) {
    SparsePoly t = SparsePoly::y_var(i, nx, n);
    for (int g = n; g >= i; --g) nilcox_apply_factor(state, g, t, lmax, ops, budget);
  }
  return state;
}

SparsePoly stanley_e(const SignedPermutation& w, int m, const Budget& budget) {
  int n = w.size() - 1;
  auto state = nilcox_d_product(n, m, 0, w.length(), budget);
  auto it = state.find(w);
  return it == state.end() ? SparsePoly(m, 0) : it->second;
}

SparsePoly schubert_ds(const SignedPermutation& w, int n, int m, const Budget& budget) {
  hard_assert(w.size() == n + 1, "element does not live in W_{n+1}");
  auto state = nilcox_ds_product(n, m, w.length(), budget);
  auto it = state.find(w);
  return it == state.end() ? SparsePoly(m, n) : it->second;
}

// --- skew elements ----------------------------------------------------------

std::optional<SkewWitness> is_skew(const SignedPermutation& w, int n) {
  hard_assert(w.size() == n + 1, "element does not live in W_{n+1}");
  int lw = w.length();
  SignedPermutation winv = w.inverse();
  for (int k = 1; k <= n; ++k) {
    GrassmannianIndex index(k, n);
    for (const auto& la : index.partitions()) {
      if (la.size() < lw) continue;
      const SignedPermutation& wla = index.element(la);
      SignedPermutation cand = winv * wla;
      if (cand.length() != la.size() - lw) continue;
      auto mu = index.find(cand);
      if (mu) return SkewWitness{k, la, *mu};
    }
  }
  return std::nullopt;
}

bool compatible_pair(const TypedPartition& la, const TypedPartition& mu, int n) {
  hard_assert(la.k == mu.k, "compatible_pair needs matching k");
  SignedPermutation wla = grassmannian_element(la, n);
  SignedPermutation wmu = grassmannian_element(mu, n);
  return (wla * wmu.inverse()).length() == la.size() - mu.size();
}

namespace {

int ambient_rank(const TypedPartition& la, const std::vector<int>& word) {
  int n = std::max(la.k, la.shape.length() + la.k - 1);
  n = std::max(n, la.shape.part(1) - la.k);
  for (int a : word) n = std::max(n, a);
  return std::max(n, 1);
}

}  // namespace

TypedTableau word_to_tableau(const std::vector<int>& word, const TypedPartition& la,
                             const TypedPartition& mu) {
  hard_assert(la.k == mu.k, "word_to_tableau needs matching k");
  if (!la.shape.contains(mu.shape))
    fail(ErrorCode::NotChainCompatible, "inner shape not contained in the outer shape");
  int n = ambient_rank(la, word);
  GrassmannianIndex index(la.k, n);
  const SignedPermutation& wla = index.element(la);
  const SignedPermutation& wmu = index.element(mu);

  SignedPermutation target = wla * wmu.inverse();
  SignedPermutation prod = SignedPermutation::identity(n + 1);
  for (int a : word) {
    if (a < 0 || a > n) fail(ErrorCode::NotReduced, "letter out of range");
    prod = prod * SignedPermutation::identity(n + 1).right_mul_s(a);
  }
  if (!(prod == target) || static_cast<int>(word.size()) != target.length())
    fail(ErrorCode::NotReduced, "word is not a reduced word for w_la w_mu^{-1}");

  TypedTableau t;
  t.chain.push_back(mu);
  SignedPermutation cur = wmu;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    cur = cur.left_mul_s(*it);
    auto next = index.find(cur);
    if (!next)
      fail(ErrorCode::NotChainCompatible,
           "prefix of the word does not reach a Grassmannian element");
    hard_assert(next->size() == t.chain.back().size() + 1 &&
                    next->shape.contains(t.chain.back().shape),
                "chain step is not a one-box extension");
    t.chain.push_back(*next);
  }
  hard_assert(t.chain.back() == la, "chain did not end at the outer shape");
  return t;
}

std::vector<int> tableau_to_word(const TypedTableau& t) {
  const TypedPartition& la = t.outer();
  int n = ambient_rank(la, {});
  GrassmannianIndex index(la.k, n);
  std::vector<int> word;
  for (size_t i = t.chain.size() - 1; i >= 1; --i) {
    SignedPermutation hi = index.element(t.chain[i]);
    SignedPermutation lo = index.element(t.chain[i - 1]);
    SignedPermutation quot = hi * lo.inverse();
    bool found = false;
    for (int a = 0; a <= n; ++a)
      if (quot == SignedPermutation::identity(n + 1).right_mul_s(a)) {
        word.push_back(a);
        found = true;
        break;
      }
    if (!found)
      fail(ErrorCode::NotChainCompatible, "chain step is not a simple reflection");
  }
  return word;
}

std::vector<int> iota(const std::vector<int>& word) {
  std::vector<int> out = word;
  for (int& a : out) {
    if (a == 0) a = 1;
    else if (a == 1) a = 0;
  }
  return out;
}

std::vector<SignedPermutation> all_elements(int n_plus_1) {
  std::vector<SignedPermutation> out;
  std::vector<int> perm(n_plus_1);
  for (int i = 0; i < n_plus_1; ++i) perm[i] = i + 1;
  do {
    for (unsigned mask = 0; mask < (1u << n_plus_1); ++mask) {
      if (__builtin_popcount(mask) % 2 != 0) continue;
      std::vector<int> img(perm);
      for (int i = 0; i < n_plus_1; ++i)
        if (mask & (1u << i)) img[i] = -img[i];
      out.emplace_back(std::move(img));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end(), [](const SignedPermutation& a, const SignedPermutation& b) {
    int la = a.length(), lb = b.length();
    if (la != lb) return la < lb;
    return a.images() < b.images();
  });
  return out;
}

}  // namespace etaforge
