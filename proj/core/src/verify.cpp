#include "etaforge/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "etaforge/eta_engine.hpp"
#include "etaforge/tableaux.hpp"
#include "etaforge/weyl_d.hpp"

namespace etaforge {

namespace {

void check(SuiteResult& res, bool cond, const std::string& what) {
  ++res.cases;
  if (!cond) res.failures.push_back(what);
}

void check_eq(SuiteResult& res, const SparsePoly& a, const SparsePoly& b,
              const std::string& what) {
  check(res, a == b, what);
}

int opt_or(int value, int fallback) { return value < 0 ? fallback : value; }

std::vector<int> k_range(const VerifyOptions& opts, int def_max_k) {
  int mk = opt_or(opts.max_k, def_max_k);
  std::vector<int> ks;
  for (int k = 1; k <= mk; ++k) ks.push_back(k);
  return ks;
}

SparsePoly from_terms(int m, int ky,
                      const std::vector<std::pair<std::vector<int>, std::vector<int>>>& keys,
                      const std::vector<long>& coeffs) {
  SparsePoly p(m, ky);
  for (size_t i = 0; i < keys.size(); ++i)
    p.add_term(keys[i].first, keys[i].second, Rat(coeffs[i]));
  return p;
}

// All compositions alpha with length <= len and |alpha| <= cap.
void all_compositions(int len, int cap, std::vector<std::vector<int>>& out) {
  std::vector<int> cur(len, 0);
  std::function<void(int, int)> go = [&](int pos, int used) {
    if (pos == len) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v + used <= cap; ++v) {
      cur[pos] = v;
      go(pos + 1, used + v);
    }
    cur[pos] = 0;
  };
  go(0, 0);
}

// --- golden suites ----------------------------------------------------------

SuiteResult suite_giambelli(const VerifyOptions&) {
  SuiteResult res{"giambelli"};
  {
    Partition la({3, 2, 2});
    auto exp = expand(OperatorSpec::giambelli(la, 2), la.parts());
    OperatorExpansion want;
    want.terms[{3, 2, 2}] = 1;
    want.terms[{4, 2, 1}] = -1;
    want.terms[{7}] = -2;
    want.terms[{6, 1}] = 2;
    want.terms[{3, 3, 1}] = -1;
    want.terms[{4, 3}] = 1;
    check(res, exp == want, "expansion of W_322 at k=2");
  }
  {
    Partition la({3, 1});
    auto exp = expand(OperatorSpec::giambelli(la, 1), la.parts());
    OperatorExpansion want;
    want.terms[{3, 1}] = 1;
    want.terms[{4}] = -2;
    check(res, exp == want, "expansion of W_31 at k=1");
  }
  return res;
}

SuiteResult suite_eta_golden(const VerifyOptions&) {
  SuiteResult res{"eta-golden"};
  Workspace ws(2, 1);
  TypedPartition t1 = validate_typed({3, 1}, 1, 1);
  TypedPartition t2 = validate_typed({3, 1}, 1, 2);

  SparsePoly h1 = from_terms(
      2, 1,
      {{{3, 1}, {0}}, {{2, 2}, {0}}, {{1, 3}, {0}},
       {{3, 0}, {1}}, {{2, 1}, {1}}, {{1, 2}, {1}}, {{0, 3}, {1}},
       {{2, 0}, {2}}, {{1, 1}, {2}}, {{0, 2}, {2}}},
      {1, 2, 1, 1, 3, 3, 1, 1, 2, 1});
  SparsePoly h2 = from_terms(2, 1,
                             {{{3, 1}, {0}}, {{2, 2}, {0}}, {{1, 3}, {0}},
                              {{2, 1}, {1}}, {{1, 2}, {1}}},
                             {1, 2, 1, 1, 1});

  check_eq(res, eta_poly(t1, ws), h1, "eta of (3,1) type 1 at m=2, ky=1");
  check_eq(res, eta_poly(t2, ws), h2, "eta of (3,1) type 2 at m=2, ky=1");

  SparsePoly theta31 = theta_poly(Partition({3, 1}), 1, ws);
  SparsePoly sum2 = (h1 + h2) * Rat(2);
  check_eq(res, sum2, theta31, "type sum equals half of Theta_31");

  auto u1 = enumerate_bitableaux(t1, 2);
  auto u2 = enumerate_bitableaux(t2, 2);
  int ones = 0, zeros = 0, others = 0;
  for (const auto& u : u1) {
    int nv = u.n_stat();
    if (nv == 1) ++ones;
    else if (nv == 0) ++zeros;
    else ++others;
  }
  check(res, u1.size() == 13, "13 bitableaux for type 1 (paper's displayed list)");
  check(res, ones == 3 && zeros == 10 && others == 0,
        "3 with n=1 and 10 with n=0 for type 1");
  bool all_zero = true;
  for (const auto& u : u2) all_zero = all_zero && u.n_stat() == 0;
  check(res, u2.size() == 6 && all_zero, "6 bitableaux for type 2, all n=0");

  // tableau route reproduces the displayed polynomials directly
  check_eq(res, eta_via_tableaux(t1, ws), h1, "bitableau sum for type 1");
  check_eq(res, eta_via_tableaux(t2, ws), h2, "bitableau sum for type 2");
  return res;
}

// --- identity sweeps --------------------------------------------------------

SuiteResult suite_tableau_vs_operator(const VerifyOptions& opts) {
  SuiteResult res{"tableau-vs-operator"};
  int max_size = opt_or(opts.max_size, 7);
  int m = opt_or(opts.m, 3);
  for (int k : k_range(opts, 3)) {
    Workspace ws(m, k);
    for (const auto& la : typed_partitions_up_to(max_size, k)) {
      SparsePoly split = eta_poly(la, ws);
      SparsePoly star = eta_via_star(la, ws);
      SparsePoly tab = eta_via_tableaux(la, ws);
      check(res, split == star && split == tab,
            "eta routes disagree for " + typed_partition_literal(la));
    }
  }
  return res;
}

SuiteResult suite_pieri(const VerifyOptions& opts) {
  SuiteResult res{"pieri"};
  int max_size = opt_or(opts.max_size, 6);
  int m = opt_or(opts.m, 4);
  int max_p = opt_or(opts.max_p, 3);
  for (int k : k_range(opts, 2)) {
    Workspace ws(m, k);
    for (const auto& la : k_strict_partitions_up_to(max_size, k)) {
      for (int p = 0; p <= max_p; ++p) {
        auto steps = pieri_steps(la, p, k);
        SparsePoly rhs = ws.zero();
        for (const auto& s : steps) {
          SparsePoly t = theta_hat_poly(s.target, k, ws);
          t *= pow2_rat(s.exponent);
          rhs += t;
        }
        SparsePoly lhs = ws.theta(k, p) * theta_hat_poly(la, k, ws);
        check_eq(res, lhs, rhs,
                 "Pieri product for " + partition_literal(la) + ", p=" + std::to_string(p) +
                     ", k=" + std::to_string(k));

        // first-row expansion route and the composition sum
        std::vector<int> row = la.parts();
        row.push_back(p);
        SparsePoly via_row = ws.zero();
        for (const auto& [comp, c] :
             expand(OperatorSpec::pieri_row(la, k), row, opts.budget).terms) {
          SparsePoly t = ws.theta_prod(k, comp);
          t *= Rat(c);
          via_row += t;
        }
        check_eq(res, via_row, lhs,
                 "first-row expansion for " + partition_literal(la) + ", p=" + std::to_string(p));

        std::vector<std::vector<int>> alphas;
        all_compositions(la.length() + 1, p, alphas);
        SparsePoly comp_sum = ws.zero();
        for (const auto& al : alphas) {
          if (seq_sum(al) != p) continue;
          std::vector<int> nu = la.parts();
          nu.push_back(0);
          for (size_t i = 0; i < al.size(); ++i) nu[i] += al[i];
          comp_sum += theta_hat_on(la, nu, k, ws);
        }
        check_eq(res, comp_sum, rhs,
                 "composition sum for " + partition_literal(la) + ", p=" + std::to_string(p));
      }
    }
  }
  return res;
}

SuiteResult suite_mirror(const VerifyOptions& opts) {
  SuiteResult res{"mirror"};
  int max_size = opt_or(opts.max_size, 6);
  int m = opt_or(opts.m, 3);
  for (int k : k_range(opts, 2)) {
    Workspace ws(m, k);
    for (const auto& la : k_strict_partitions_up_to(max_size, k)) {
      std::vector<std::vector<int>> alphas;
      all_compositions(la.length(), static_cast<int>(la.size()), alphas);
      SparsePoly lhs = ws.zero();
      for (const auto& al : alphas) {
        std::vector<int> nu = la.parts();
        for (size_t i = 0; i < al.size(); ++i) nu[i] -= al[i];
        SparsePoly t = theta_hat_on(la, nu, k, ws);
        t *= pow2_rat(seq_nonzero_count(al));
        lhs += t;
      }
      SparsePoly rhs = ws.zero();
      for (long long s = 0; s <= la.size(); ++s)
        for (const auto& mu : k_strict_between(Partition(), la, s, k)) {
          if (!is_kprime_strip(la, mu, k)) continue;
          SparsePoly t = theta_hat_poly(mu, k, ws);
          t *= pow2_rat(strip_m(la, mu, k));
          rhs += t;
        }
      check_eq(res, lhs, rhs, "mirror identity for " + partition_literal(la) +
                                  ", k=" + std::to_string(k));
    }
  }
  return res;
}

SuiteResult suite_reduction(const VerifyOptions& opts) {
  SuiteResult res{"reduction"};
  int max_size = opt_or(opts.max_size, 6);
  int m = opt_or(opts.m, 3);
  for (int k : k_range(opts, 2)) {
    Workspace ws(m, k);
    Workspace tail(m - 1, k);
    SparsePoly x1 = SparsePoly::x_var(1, m, k);

    // untyped reductions for eta-hat and eta-tilde
    for (const auto& la : k_strict_partitions_up_to(max_size, k)) {
      SparsePoly rhs_hat = ws.zero();
      SparsePoly rhs_til = ws.zero();
      SparsePoly x1pow = ws.one();
      for (int p = 0; p <= la.size(); ++p) {
        if (p > 0) x1pow = x1pow * x1;
        for (const auto& mu : k_strict_between(Partition(), la, la.size() - p, k)) {
          if (!is_kprime_strip(la, mu, k)) continue;
          int n_hat = k_length(mu, k) - k_length(la, k) + strip_m(la, mu, k);
          SparsePoly h = eta_hat(mu, k, tail).embed(m, 1, k, 0);
          h *= pow2_rat(n_hat);
          rhs_hat += x1pow * h;
          if (la.has_part(k) && mu.has_part(k)) {
            SparsePoly t = eta_tilde(mu, k, tail).embed(m, 1, k, 0);
            t *= pow2_rat(n_hat);
            rhs_til += x1pow * t;
          }
        }
      }
      check_eq(res, eta_hat(la, k, ws), rhs_hat,
               "eta-hat reduction for " + partition_literal(la) + ", k=" + std::to_string(k));
      if (la.has_part(k))
        check_eq(res, eta_tilde(la, k, ws), rhs_til,
                 "eta-tilde reduction for " + partition_literal(la) +
                     ", k=" + std::to_string(k));
    }

    // typed reduction
    for (const auto& la : typed_partitions_up_to(max_size, k)) {
      try {
        reduce_first_variable(la, ws);
        ++res.cases;
      } catch (const DomainError& e) {
        ++res.cases;
        res.failures.push_back("typed reduction for " + typed_partition_literal(la) + ": " +
                               e.what());
      }
    }
  }
  return res;
}

SuiteResult suite_tseq(const VerifyOptions& opts) {
  SuiteResult res{"tseq"};
  int max_size = opt_or(opts.max_size, 6);
  int m = opt_or(opts.m, 3);
  int n = opt_or(opts.n, 4);
  NilCoxeterElement table = nilcox_ds_product(n, m, max_size, opts.budget);
  for (int k : k_range(opts, 2)) {
    Workspace ws(m, k);
    GrassmannianIndex index(k, n);
    for (const auto& la : index.partitions()) {
      if (la.size() > max_size) continue;
      auto it = table.find(index.element(la));
      SparsePoly ds = (it == table.end()) ? SparsePoly(m, n) : it->second;
      for (int j = k + 1; j <= n; ++j) ds = ds.set_y_zero(j);
      SparsePoly h = eta_poly(la, ws).embed(m, 0, n, 0);
      check_eq(res, h, ds,
               "eta vs Schubert polynomial for " + typed_partition_literal(la));
    }
  }
  return res;
}

SuiteResult suite_zerolem(const VerifyOptions& opts) {
  SuiteResult res{"zerolem"};
  int max_size = opt_or(opts.max_size, 7);
  for (int k : k_range(opts, 3))
    for (const auto& la : typed_partitions_up_to(max_size, k)) {
      try {
        eta_zero_spec(la, k);
        ++res.cases;
      } catch (const DomainError& e) {
        ++res.cases;
        res.failures.push_back(std::string("zero specialization: ") + e.what());
      }
    }
  return res;
}

// --- words and tableaux -----------------------------------------------------

std::vector<int> parse_word(const std::string& digits) {
  std::vector<int> w;
  for (char c : digits) w.push_back(c - '0');
  return w;
}

SuiteResult suite_words_golden(const VerifyOptions&) {
  SuiteResult res{"words-golden"};
  {
    TypedPartition la = validate_typed({8, 4, 3, 2}, 3, 1);
    check(res, grassmannian_element(la, 7) ==
                   SignedPermutation({3, 5, 7, -6, -2, 1, 4, 8}),
          "Grassmannian element of (8,4,3,2), k=3");
  }
  TypedPartition la7652_t1 = validate_typed({7, 6, 5, 2}, 2, 1);
  TypedPartition la7652_t2 = validate_typed({7, 6, 5, 2}, 2, 2);
  check(res, grassmannian_element(la7652_t1, 5) ==
                 SignedPermutation({2, 3, -6, -5, -4, -1}),
        "Grassmannian element of (7,6,5,2), k=2, type 1");
  check(res, grassmannian_element(la7652_t2, 5) ==
                 SignedPermutation({-2, 3, -6, -5, -4, 1}),
        "Grassmannian element of (7,6,5,2), k=2, type 2");

  TypedPartition la421 = validate_typed({4, 2, 1}, 1, 1);
  SignedPermutation w421({3, -4, -2, 1});
  check(res, grassmannian_element(la421, 3) == w421,
        "Grassmannian element of (4,2,1), k=1");

  auto words = reduced_words(w421);
  std::set<std::vector<int>> got(words.begin(), words.end());
  std::set<std::vector<int>> want;
  for (const char* s : {"1320321", "1323021", "1232021", "1230201", "1230210",
                        "1203201", "1203210", "3120321", "3123021"})
    want.insert(parse_word(s));
  check(res, got == want, "the nine reduced words of 3(-4)(-2)1");

  check(res, iota(parse_word("02120")) == parse_word("12021"), "iota swaps 0 and 1");
  check(res, iota(iota(parse_word("0211345"))) == parse_word("0211345"),
        "iota is an involution");

  // bijection goldens for (4,2,1)
  TypedPartition empty1 = validate_typed({}, 1, 0);
  {
    TypedTableau t = word_to_tableau(parse_word("1320321"), la421, empty1);
    check(res, render_tableau(t) == "1 4 5 6\n2 7\n3\n", "tableau of word 1320321");
    check(res, tableau_to_word(t) == parse_word("1320321"), "roundtrip of word 1320321");
  }
  {
    TypedTableau t = word_to_tableau(parse_word("1230210"), la421, empty1);
    check(res, render_tableau(t) == "1o 2  3  5\n4  7\n6\n",
          "tableau of word 1230210 has a circled 1");
    check(res, t.chain.at(1).type == 2, "first chain step of 1230210 is type 2");
  }

  // the 20-letter words for (7,6,5,2)
  std::vector<int> w_t1 = {3, 2, 0, 4, 3, 2, 1, 5, 4, 3, 2, 0, 4, 3, 2, 1, 5, 4, 3, 2};
  std::vector<int> w_t2 = {3, 2, 1, 4, 3, 2, 0, 5, 4, 3, 2, 1, 4, 3, 2, 0, 5, 4, 3, 2};
  check(res, iota(w_t1) == w_t2, "iota maps the type 1 word to the displayed type 2 word");
  TypedPartition empty2 = validate_typed({}, 2, 0);
  TypedTableau t1 = word_to_tableau(w_t1, la7652_t1, empty2);
  TypedTableau t2 = word_to_tableau(w_t2, la7652_t2, empty2);
  check(res, j_involution(t1) == t2, "iota matches j on the (7,6,5,2) standard tableau");
  // the standard filling goes down the first two columns, then across rows
  std::vector<std::vector<int>> expect = {{1, 5, 9, 10, 11, 12, 13},
                                          {2, 6, 14, 15, 16, 17},
                                          {3, 7, 18, 19, 20},
                                          {4, 8}};
  bool boxes_ok = true;
  for (size_t step = 1; step < t1.chain.size(); ++step) {
    const Partition& lo = t1.chain[step - 1].shape;
    const Partition& hi = t1.chain[step].shape;
    for (int r = 1; r <= hi.length(); ++r)
      for (int c = lo.part(r) + 1; c <= hi.part(r); ++c)
        if (expect[r - 1][c - 1] != static_cast<int>(step)) boxes_ok = false;
  }
  check(res, boxes_ok, "(7,6,5,2) word fills columns of la^2 then rows of la^1");
  bool circles_ok = true;
  for (size_t step = 1; step < t1.chain.size(); ++step) {
    bool circled = t1.chain[step].type == 2;
    bool circled2 = t2.chain[step].type == 2;
    if (circled) circles_ok = false;                    // type 1 side: no circles
    if ((step >= 5) != circled2) circles_ok = false;    // type 2 side: 5..20 circled
  }
  check(res, circles_ok, "(7,6,5,2) circling pattern matches the displayed tableaux");
  return res;
}

SuiteResult suite_stdcor(const VerifyOptions& opts) {
  SuiteResult res{"stdcor"};
  int max_size = opt_or(opts.max_size, 6);
  int n = opt_or(opts.n, 3);
  for (int k : k_range(opts, n)) {
    GrassmannianIndex index(k, n);
    for (const auto& la : index.partitions()) {
      if (la.size() > max_size) continue;
      for (const auto& mu : index.partitions()) {
        if (mu.size() > la.size() || !la.shape.contains(mu.shape)) continue;
        SignedPermutation quot = index.element(la) * index.element(mu).inverse();
        bool compat = quot.length() == la.size() - mu.size();
        auto standard = enumerate_standard(la, mu);
        if (!compat) {
          check(res, standard.empty(),
                "standard tableaux exist for an incompatible pair " +
                    typed_partition_literal(la) + " / " + typed_partition_literal(mu));
          continue;
        }
        auto words = reduced_words(quot);
        check(res, words.size() == standard.size(),
              "word/tableau count mismatch for " + typed_partition_literal(la) + " / " +
                  typed_partition_literal(mu));
        std::set<std::vector<int>> from_tableaux;
        bool round_ok = true, iota_ok = true;
        for (const auto& t : standard) {
          auto word = tableau_to_word(t);
          from_tableaux.insert(word);
          if (!(word_to_tableau(word, la, mu) == t)) round_ok = false;
        }
        for (const auto& word : words) {
          TypedTableau t = word_to_tableau(word, la, mu);
          if (tableau_to_word(t) != word) round_ok = false;
          TypedTableau ti = word_to_tableau(iota(word), j_involution(la), j_involution(mu));
          if (!(ti == j_involution(t))) iota_ok = false;
        }
        check(res, round_ok, "bijection roundtrip for " + typed_partition_literal(la) +
                                 " / " + typed_partition_literal(mu));
        check(res, iota_ok, "iota/j compatibility for " + typed_partition_literal(la) +
                                " / " + typed_partition_literal(mu));
        check(res,
              from_tableaux == std::set<std::vector<int>>(words.begin(), words.end()),
              "word sets differ for " + typed_partition_literal(la) + " / " +
                  typed_partition_literal(mu));
      }
    }
  }
  return res;
}

SuiteResult suite_positivity(const VerifyOptions& opts) {
  SuiteResult res{"positivity"};
  int n = opt_or(opts.n, 3);
  int lmax = opt_or(opts.max_length, 5);
  std::vector<NilCoxeterElement> tables(lmax + 1);
  for (int m = 1; m <= lmax; ++m) tables[m] = nilcox_d_product(n, m, 0, lmax, opts.budget);
  for (const auto& w : all_elements(n + 1)) {
    int lw = w.length();
    if (lw > lmax) continue;
    auto witness = is_skew(w, n);
    if (!witness) continue;
    int m = std::max(lw, 1);
    auto it = tables[m].find(w);
    SparsePoly ew = (it == tables[m].end()) ? SparsePoly(m, 0) : it->second;
    check(res, !ew.is_zero() || lw == 0, "Stanley function vanishes for skew " + w.to_string());

    Workspace ws(m, 0);
    bool positive = true;
    try {
      for (const auto& [part, c] : expand_in_schur_p(ew, ws))
        if (c < 0 || !is_integer(c)) positive = false;
    } catch (const DomainError&) {
      positive = false;
    }
    check(res, positive, "Schur P expansion not nonnegative-integral for " + w.to_string());

    SparsePoly skew = e_skew(witness->la, witness->mu, ws);
    check_eq(res, ew, skew, "Stanley function vs skew tableau sum for " + w.to_string());
  }
  return res;
}

SuiteResult suite_coproduct(const VerifyOptions& opts) {
  SuiteResult res{"coproduct"};
  int max_size = opt_or(opts.max_size, 5);
  int lmax = opt_or(opts.max_length, 5);
  int n = opt_or(opts.n, 3);

  for (int k : k_range(opts, 2)) {
    Workspace ws3(3, k), ws2(2, k), ws1(1, k);
    for (const auto& la : typed_partitions_up_to(max_size, k)) {
      SparsePoly lhs = eta_poly(la, ws3);
      SparsePoly split_sum = ws3.zero();
      SparsePoly tab_sum = ws3.zero();
      SparsePoly e3_sum = ws3.zero();
      SparsePoly e3 = e_skew(la, validate_typed({}, k, 0), ws3);
      for (long long s = 0; s <= la.size(); ++s)
        for (const auto& shape : k_strict_between(Partition(), la.shape, s, k))
          for (const auto& mu : typed_versions(shape, k)) {
            SparsePoly exm = e_skew(la, mu, ws1);
            if (!exm.is_zero()) {
              split_sum += exm.embed(3, 0, k, 0) * eta_poly(mu, ws2).embed(3, 1, k, 0);
              e3_sum += exm.embed(3, 0, k, 0) *
                        e_skew(mu, validate_typed({}, k, 0), ws2).embed(3, 1, k, 0);
            }
            if (mu.type != 2 && shape.part(1) <= k) {
              SparsePoly e_full = e_skew(la, mu, ws3);
              tab_sum += e_full * ws3.schur_s_conjugate(shape);
            }
          }
      check_eq(res, lhs, split_sum,
               "variable-split expansion for " + typed_partition_literal(la));
      check_eq(res, lhs, tab_sum, "Schur-S expansion for " + typed_partition_literal(la));
      check_eq(res, e3, e3_sum, "skew coproduct onto the empty shape for " +
                                    typed_partition_literal(la));

      // full coproduct over inner shapes
      for (long long s = 0; s <= la.size(); ++s)
        for (const auto& shape : k_strict_between(Partition(), la.shape, s, k))
          for (const auto& mu : typed_versions(shape, k)) {
            SparsePoly left = e_skew(la, mu, ws3);
            SparsePoly sum = ws3.zero();
            for (long long s2 = mu.size(); s2 <= la.size(); ++s2)
              for (const auto& nshape : k_strict_between(mu.shape, la.shape, s2, k))
                for (const auto& nu : typed_versions(nshape, k)) {
                  SparsePoly a = e_skew(la, nu, ws1);
                  if (a.is_zero()) continue;
                  SparsePoly b = e_skew(nu, mu, ws2);
                  if (b.is_zero()) continue;
                  sum += a.embed(3, 0, k, 0) * b.embed(3, 1, k, 0);
                }
            check_eq(res, left, sum,
                     "skew coproduct for " + typed_partition_literal(la) + " / " +
                         typed_partition_literal(mu));
          }
    }
  }

  // nilCoxeter identities in W_{n+1}
  NilCoxeterElement e3t = nilcox_d_product(n, 3, 0, lmax, opts.budget);
  NilCoxeterElement e2t = nilcox_d_product(n, 2, 0, lmax, opts.budget);
  NilCoxeterElement e1t = nilcox_d_product(n, 1, 0, lmax, opts.budget);
  NilCoxeterElement ds3 = nilcox_ds_product(n, 3, lmax, opts.budget);
  NilCoxeterElement ds2 = nilcox_ds_product(n, 2, lmax, opts.budget);
  auto coeff = [](const NilCoxeterElement& t, const SignedPermutation& w, int m, int ky) {
    auto it = t.find(w);
    return it == t.end() ? SparsePoly(m, ky) : it->second;
  };
  auto elements = all_elements(n + 1);
  for (const auto& w : elements) {
    int lw = w.length();
    if (lw > lmax) continue;
    SparsePoly lhs_e = coeff(e3t, w, 3, 0);
    SparsePoly lhs_ds = coeff(ds3, w, 3, n);
    SparsePoly rhs_e(3, 0), rhs_ds(3, n);
    for (const auto& u : elements) {
      int lu = u.length();
      if (lu > lw) continue;
      SignedPermutation v = u.inverse() * w;
      if (v.length() != lw - lu) continue;
      SparsePoly eu = coeff(e1t, u, 1, 0);
      if (eu.is_zero()) continue;
      rhs_e += eu.embed(3, 0, 0, 0) * coeff(e2t, v, 2, 0).embed(3, 1, 0, 0);
      rhs_ds += eu.embed(3, 0, n, 0) * coeff(ds2, v, 2, n).embed(3, 1, n, 0);
    }
    check_eq(res, lhs_e, rhs_e, "Stanley coproduct for " + w.to_string());
    check_eq(res, lhs_ds, rhs_ds, "Schubert coproduct for " + w.to_string());
  }

  // commuting generating series, plus word independence spot checks
  {
    NilCoxeterElement a, b;
    a.emplace(SignedPermutation::identity(n + 1), SparsePoly::one(2, 0));
    b.emplace(SignedPermutation::identity(n + 1), SparsePoly::one(2, 0));
    long long ops = 0;
    std::vector<int> gens;
    for (int i = n; i >= 2; --i) gens.push_back(i);
    gens.push_back(1);
    gens.push_back(0);
    for (int i = 2; i <= n; ++i) gens.push_back(i);
    for (int var : {1, 2})
      for (int g : gens)
        nilcox_apply_factor(a, g, SparsePoly::x_var(var, 2, 0), lmax, ops, opts.budget);
    for (int var : {2, 1})
      for (int g : gens)
        nilcox_apply_factor(b, g, SparsePoly::x_var(var, 2, 0), lmax, ops, opts.budget);
    check(res, a == b, "D(s) D(t) = D(t) D(s)");
  }
  {
    std::mt19937_64 rng(opts.seed);
    auto pool = all_elements(n + 1);
    std::vector<SignedPermutation> sample;
    for (const auto& w : pool)
      if (w.length() >= 2 && w.length() <= lmax) sample.push_back(w);
    for (int trial = 0; trial < 3 && !sample.empty(); ++trial) {
      const auto& w = sample[rng() % sample.size()];
      auto words = reduced_words(w);
      bool ok = true;
      for (const auto& word : {words.front(), words.back()}) {
        SignedPermutation cur = SignedPermutation::identity(n + 1);
        for (int a2 : word) {
          if (!cur.right_ascent(a2)) ok = false;  // the nilCoxeter product would vanish
          cur = cur.right_mul_s(a2);
        }
        if (!(cur == w)) ok = false;
      }
      check(res, ok, "nilCoxeter basis element independent of the reduced word for " +
                         w.to_string());
    }
  }
  return res;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"giambelli",  "eta-golden", "tableau-vs-operator", "pieri",
          "mirror",     "reduction",  "tseq",                "words-golden",
          "stdcor",     "zerolem",    "positivity",          "coproduct"};
}

SuiteResult verify_suite(const std::string& name, const VerifyOptions& opts) {
  if (name == "giambelli") return suite_giambelli(opts);
  if (name == "eta-golden") return suite_eta_golden(opts);
  if (name == "tableau-vs-operator") return suite_tableau_vs_operator(opts);
  if (name == "pieri") return suite_pieri(opts);
  if (name == "mirror") return suite_mirror(opts);
  if (name == "reduction") return suite_reduction(opts);
  if (name == "tseq") return suite_tseq(opts);
  if (name == "words-golden") return suite_words_golden(opts);
  if (name == "stdcor") return suite_stdcor(opts);
  if (name == "zerolem") return suite_zerolem(opts);
  if (name == "positivity") return suite_positivity(opts);
  if (name == "coproduct") return suite_coproduct(opts);
  fail(ErrorCode::ParseError, "unknown verification suite '" + name + "'");
}

}  // namespace etaforge
