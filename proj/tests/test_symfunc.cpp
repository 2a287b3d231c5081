#include <doctest.h>

#include "etaforge/symfunc.hpp"
#include "shifted_oracle.hpp"

using namespace etaforge;

TEST_CASE("q series") {
  Workspace ws(2, 0);
  SparsePoly x1 = SparsePoly::x_var(1, 2, 0), x2 = SparsePoly::x_var(2, 2, 0);
  CHECK(ws.q(0) == ws.one());
  CHECK(ws.q(1) == (x1 + x2) * Rat(2));
  CHECK(ws.q(2) == (x1 + x2) * (x1 + x2) * Rat(2));
  CHECK(ws.q(-3).is_zero());
}

TEST_CASE("elementary symmetric series") {
  Workspace w1(0, 1);
  CHECK(w1.e(1) == SparsePoly::y_var(1, 0, 1));
  Workspace w3(0, 3);
  SparsePoly want(0, 3);
  want.add_term({}, {1, 1, 0}, Rat(1));
  want.add_term({}, {1, 0, 1}, Rat(1));
  want.add_term({}, {0, 1, 1}, Rat(1));
  CHECK(w3.e(2) == want);
  CHECK(w3.e(4).is_zero());
  CHECK(w3.e(-1).is_zero());
}

TEST_CASE("Schur Q and P") {
  Workspace ws(2, 0);
  SparsePoly p31 = ws.schur_p(Partition({3, 1}));
  SparsePoly want(2, 0);
  want.add_term({3, 1}, {}, Rat(1));
  want.add_term({2, 2}, {}, Rat(2));
  want.add_term({1, 3}, {}, Rat(1));
  CHECK(p31 == want);
  CHECK(ws.schur_q(Partition()) == ws.one());
  CHECK_THROWS_AS(ws.schur_q(Partition({2, 2})), DomainError);
}

TEST_CASE("Schur Q against the shifted tableau oracle") {
  for (int m = 1; m <= 3; ++m) {
    Workspace ws(m, 0);
    for (int n = 0; n <= 6; ++n)
      for (const auto& la : partitions_of(n, n, n)) {
        bool strict = true;
        for (int i = 1; i < la.length(); ++i)
          if (la.part(i) == la.part(i + 1)) strict = false;
        if (!strict) continue;
        CHECK(ws.schur_q(la) == testoracle::schur_q_oracle(la, m));
      }
  }
}

TEST_CASE("theta generators") {
  Workspace ws(2, 1);
  CHECK(ws.theta(1, 0) == ws.one());
  SparsePoly want = ws.q(1) + ws.e(1);
  CHECK(ws.theta(1, 1) == want);
  CHECK(ws.theta(1, -2).is_zero());
}

TEST_CASE("eta generators against theta") {
  for (int k : {1, 2, 3}) {
    Workspace ws(3, k);
    CHECK(ws.theta(k, k) == ws.eta_r(k, k) + ws.eta_k_prime(k));
    CHECK(ws.eta_r(k, k) - ws.eta_k_prime(k) == ws.e(k));
    CHECK(ws.theta(k, k + 1) == ws.eta_r(k, k + 1) * Rat(2));
    if (k >= 2) CHECK(ws.theta(k, k - 1) == ws.eta_r(k, k - 1));
  }
}

TEST_CASE("presentation relations hold in the theta realization") {
  for (int k : {1, 2}) {
    Workspace ws(3, k);
    for (int r = k + 1; r <= k + 2; ++r) {
      SparsePoly acc = ws.theta(k, r) * ws.theta(k, r);
      for (int i = 1; i <= r; ++i) {
        SparsePoly t = ws.theta(k, r + i) * ws.theta(k, r - i) * Rat(2);
        if (i % 2 == 1) t *= Rat(-1);
        acc += t;
      }
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("classical families are symmetric") {
  Workspace ws(3, 2);
  for (int r = 0; r <= 5; ++r) {
    CHECK(ws.q(r).is_symmetric_x());
    CHECK(ws.e(r).is_symmetric_y());
    CHECK(ws.theta(2, r).is_symmetric_x());
    CHECK(ws.theta(2, r).is_symmetric_y());
    CHECK(ws.eta_r(2, r).is_symmetric_x());
    CHECK(ws.eta_r(2, r).is_symmetric_y());
  }
  CHECK(ws.schur_q(Partition({3, 1})).is_symmetric_x());
}

TEST_CASE("stability under dropping the last variable") {
  Workspace big(4, 2), small(3, 2);
  auto drop = [&](const SparsePoly& p) { return p.set_x_zero(4); };
  for (int r = 0; r <= 5; ++r) {
    CHECK(drop(big.q(r)) == small.q(r).embed(4, 0, 2, 0));
    CHECK(drop(big.theta(2, r)) == small.theta(2, r).embed(4, 0, 2, 0));
  }
  CHECK(drop(big.schur_q(Partition({3, 1}))) ==
        small.schur_q(Partition({3, 1})).embed(4, 0, 2, 0));
}

TEST_CASE("Schur s of the conjugate shape") {
  Workspace w1(0, 1);
  CHECK(w1.schur_s_conjugate(Partition({1})) == SparsePoly::y_var(1, 0, 1));
  CHECK(w1.schur_s_conjugate(Partition({2})).is_zero());
  Workspace w2(0, 2);
  SparsePoly want(0, 2);
  want.add_term({}, {2, 1}, Rat(1));
  want.add_term({}, {1, 2}, Rat(1));
  CHECK(w2.schur_s_conjugate(Partition({2, 1})) == want);
}

TEST_CASE("Schur s against the dual Jacobi-Trudi determinant") {
  // s_{mu'} = det(e_{mu_i - i + j})
  for (int ky = 1; ky <= 3; ++ky) {
    Workspace ws(0, ky);
    for (int n = 0; n <= 5; ++n)
      for (const auto& mu : partitions_of(n, n, n)) {
        int l = mu.length();
        SparsePoly det = ws.one();
        if (l > 0) {
          std::vector<std::vector<SparsePoly>> a(l, std::vector<SparsePoly>(l, ws.zero()));
          for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= l; ++j) a[i - 1][j - 1] = ws.e(mu.part(i) - i + j);
          // Leibniz over the small matrix
          std::vector<int> perm(l);
          for (int i = 0; i < l; ++i) perm[i] = i;
          det = ws.zero();
          do {
            int inv = 0;
            for (int i = 0; i < l; ++i)
              for (int j = i + 1; j < l; ++j)
                if (perm[i] > perm[j]) ++inv;
            SparsePoly term = ws.one();
            for (int i = 0; i < l; ++i) term = term * a[i][perm[i]];
            if (inv % 2 == 1) term *= Rat(-1);
            det += term;
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
        CHECK(ws.schur_s_conjugate(mu) == det);
      }
  }
}

TEST_CASE("skew q determinant") {
  Workspace ws(2, 0);
  CHECK(ws.skew_q_determinant(Partition({2, 1}), Partition({2, 1})) == ws.one());
  CHECK(ws.skew_q_determinant(Partition({1}), Partition()) == ws.q(1));
  SparsePoly det = ws.q(2) * ws.q(1) - ws.q(3) * ws.q(0);
  CHECK(ws.skew_q_determinant(Partition({2, 1}), Partition()) == det);
}

TEST_CASE("expansion in the Schur P basis") {
  Workspace ws(3, 0);
  auto c1 = expand_in_schur_p(ws.schur_p(Partition({3, 1})), ws);
  CHECK(c1 == std::map<Partition, Rat>{{Partition({3, 1}), Rat(1)}});
  auto c2 = expand_in_schur_p(ws.q(2), ws);
  CHECK(c2 == std::map<Partition, Rat>{{Partition({2}), Rat(2)}});

  Workspace w1(1, 0);
  SparsePoly twox(1, 0);
  twox.add_term({1}, {}, Rat(2));
  auto c3 = expand_in_schur_p(twox, w1);
  CHECK(c3 == std::map<Partition, Rat>{{Partition({1}), Rat(2)}});

  SparsePoly asym(2, 0);
  asym.add_term({1, 0}, {}, Rat(1));
  Workspace w2(2, 0);
  CHECK_THROWS_AS(expand_in_schur_p(asym, w2), DomainError);

  // e_2 is not in the span
  SparsePoly e2(2, 0);
  e2.add_term({1, 1}, {}, Rat(1));
  CHECK_THROWS_AS(expand_in_schur_p(e2, w2), DomainError);

  // degree above the variable count
  Workspace w1b(1, 0);
  SparsePoly deep(1, 0);
  deep.add_term({2}, {}, Rat(1));
  CHECK_THROWS_AS(expand_in_schur_p(deep, w1b), DomainError);
}
