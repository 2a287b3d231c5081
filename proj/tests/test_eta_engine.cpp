#include <doctest.h>

#include "etaforge/eta_engine.hpp"

using namespace etaforge;

namespace {

// exact rank of a list of polynomials, by Gaussian elimination over Q
int poly_rank(std::vector<SparsePoly> polys) {
  std::vector<std::map<SparsePoly::Key, Rat>> rows;
  for (auto& p : polys) {
    std::map<SparsePoly::Key, Rat> row(p.terms().begin(), p.terms().end());
    for (const auto& pivot : rows) {
      if (row.empty()) break;
      auto lead = pivot.begin()->first;
      auto it = row.find(lead);
      if (it == row.end()) continue;
      Rat factor = it->second / pivot.begin()->second;
      for (const auto& [key, c] : pivot) {
        row[key] -= factor * c;
        if (row[key] == 0) row.erase(key);
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return static_cast<int>(rows.size());
}

}  // namespace

TEST_CASE("theta polynomial basics") {
  Workspace ws(2, 2);
  CHECK(theta_poly(Partition(), 2, ws) == ws.one());
  for (int r = 1; r <= 2; ++r) CHECK(theta_poly(Partition({r}), 2, ws) == ws.theta(2, r));
}

TEST_CASE("eta-hat and eta-tilde") {
  Workspace ws(2, 1);
  CHECK(eta_hat(Partition(), 1, ws) == ws.one());
  SparsePoly til = eta_tilde(Partition({3, 1}), 1, ws);
  SparsePoly want = ws.e(1) * theta_poly(Partition({3}), 1, ws);
  want *= Rat(1, 2);
  CHECK(til == want);
  CHECK(eta_tilde(Partition({3, 2}), 1, ws).is_zero());

  // the tilde part is the difference of the two types
  SparsePoly h1 = eta_poly(validate_typed({3, 1}, 1, 1), ws);
  SparsePoly h2 = eta_poly(validate_typed({3, 1}, 1, 2), ws);
  CHECK(h1 - h2 == til);
  CHECK(h1 + h2 == eta_hat(Partition({3, 1}), 1, ws));
}

TEST_CASE("eta of the empty partition") {
  Workspace ws(3, 2);
  CHECK(eta_poly(validate_typed({}, 2, 0), ws) == ws.one());
  CHECK(eta_via_star(validate_typed({}, 2, 0), ws) == ws.one());
}

TEST_CASE("zero specialization cases") {
  CHECK(eta_zero_spec(validate_typed({3, 1}, 1, 1), 1).is_zero());
  for (int k : {1, 2}) CHECK(eta_zero_spec(validate_typed({k}, k, 2), k).is_zero());
  SparsePoly s = eta_zero_spec(validate_typed({1}, 2, 0), 2);
  CHECK(s == SparsePoly::y_var(1, 0, 2) + SparsePoly::y_var(2, 0, 2));
}

TEST_CASE("first-variable reduction data") {
  Workspace ws(2, 1);
  auto terms = reduce_first_variable(validate_typed({}, 1, 0), ws);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].p == 0);
  CHECK(terms[0].n == 0);
  CHECK(terms[0].mu.shape.empty());
  CHECK_NOTHROW(reduce_first_variable(validate_typed({3, 1}, 1, 1), ws));
}

TEST_CASE("eta polynomials of one degree are linearly independent") {
  for (int k : {1, 2}) {
    Workspace ws(5, k);
    for (int d = 1; d <= 5; ++d) {
      std::vector<SparsePoly> polys;
      for (const auto& shape : k_strict_partitions_of(d, k, d, d))
        for (const auto& la : typed_versions(shape, k)) polys.push_back(eta_poly(la, ws));
      CHECK(poly_rank(polys) == static_cast<int>(polys.size()));
    }
  }
}

TEST_CASE("eta is stable under dropping the last variable") {
  Workspace big(3, 1), small(2, 1);
  for (const auto& la : typed_partitions_up_to(5, 1))
    CHECK(eta_poly(la, big).set_x_zero(3) == eta_poly(la, small).embed(3, 0, 1, 0));
}

TEST_CASE("final coefficients are integers") {
  for (int k : {1, 2}) {
    Workspace ws(3, k);
    for (const auto& la : typed_partitions_up_to(6, k)) CHECK(eta_poly(la, ws).integral());
  }
}
