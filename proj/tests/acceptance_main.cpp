// Acceptance suite: one criterion per line, exact-arithmetic equality
// throughout (tolerance is zero by construction).

#include <chrono>
#include <cstring>
#include <iostream>
#include <string>
#include <vector>

#include "etaforge/verify.hpp"

using namespace etaforge;

namespace {

struct Criterion {
  int id;
  std::string label;
  std::vector<std::string> suites;
  double time_limit_s;  // 0: no stated limit
};

const std::vector<Criterion> criteria = {
    {1, "Giambelli golden expansion of W_322 at k=2", {"giambelli"}, 1.0},
    {2, "eta golden polynomials and bitableau counts for (3,1), k=1", {"eta-golden"}, 1.0},
    {3, "tableau = type-split = star action for |la| <= 7, k <= 3, m=3",
     {"tableau-vs-operator"}, 300.0},
    {4, "Pieri rule as a polynomial identity, |la| <= 6, k <= 2, p <= 3, m=4",
     {"pieri"}, 300.0},
    {5, "mirror identity, |la| <= 6, k <= 2, m=3", {"mirror"}, 300.0},
    {6, "reduction formulas, |la| <= 6, k <= 2", {"reduction"}, 0},
    {7, "eta equals the Schubert polynomial of w_la, |la| <= 6, k <= 2, n=4",
     {"tseq"}, 600.0},
    {8, "word and tableau goldens, counts and bijection roundtrips",
     {"words-golden", "stdcor"}, 0},
    {9, "zero specialization four-way case formula, |la| <= 7, k <= 3", {"zerolem"}, 0},
    {10, "Schur P positivity and skew Stanley matching, l(w) <= 5", {"positivity"}, 0},
    {11, "coproduct identities under the (x1),(x2,x3) split", {"coproduct"}, 0},
};

bool run_criterion(const Criterion& c) {
  auto start = std::chrono::steady_clock::now();
  int cases = 0;
  std::vector<std::string> failures;
  for (const auto& suite : c.suites) {
    SuiteResult res = verify_suite(suite);
    cases += res.cases;
    failures.insert(failures.end(), res.failures.begin(), res.failures.end());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool in_time = c.time_limit_s == 0 || secs <= c.time_limit_s;
  bool pass = failures.empty() && in_time;
  std::printf("%s criterion %2d: %s  [%d checks, %.2fs]\n", pass ? "PASS" : "FAIL", c.id,
              c.label.c_str(), cases, secs);
  for (const auto& f : failures) std::printf("      failure: %s\n", f.c_str());
  if (!in_time)
    std::printf("      failure: runtime %.2fs exceeded the %.0fs target\n", secs,
                c.time_limit_s);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  int only = -1;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);
  int failed = 0;
  for (const auto& c : criteria) {
    if (only > 0 && c.id != only) continue;
    if (!run_criterion(c)) ++failed;
  }
  return failed;
}
