// One line per acceptance criterion; exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "adlv/verify.hpp"

using namespace adlv;

namespace {

struct Criterion
{
  int id;
  std::string what;
  std::function<std::vector<verify::Report>()> run;
  double limit_s = 0; // 0: no limit
};

} // namespace

int main()
{
  std::vector<Criterion> const criteria{
    {1, "closed-form classification agrees with the criterion, n <= 10",
     [] { return std::vector{verify::oracle(2, 10)}; }},
    {2, "stratum graphs for n = 13, 14 match the stored figures",
     [] { return std::vector{verify::figures()}; }, 10.0},
    {3, "closed forms for lengths, supports, S(w, sigma), n <= 20",
     [] { return std::vector{verify::closed_forms(20)}; }},
    {4, "dimensions and irreducible components, n <= 20",
     [] { return std::vector{verify::dimensions(20)}; }},
    {5, "reduction certificates for every non-DL stratum, n = 7..9, 13, 14",
     [] { return std::vector{verify::reductions({7, 8, 9, 13, 14})}; }},
    {6, "empty strata have witnesses; R- and LP-forms agree",
     [] { return std::vector{verify::emptiness(13, 9)}; }},
    {7, "positive Coxeter flag, closed form vs search, n <= 9",
     [] { return std::vector{verify::positive_coxeter(9)}; }},
    {8, "group substrate: identities, lengths, Bruhat order, admissible set",
     [] { return std::vector{verify::substrate()}; }},
    {9, "closure order on DL strata, n <= 7",
     [] { return std::vector{verify::closure_order(7)}; }},
  };

  bool all_ok = true;
  for (Criterion const &c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    std::vector<verify::Report> reports = c.run();
    double const secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool ok = true;
    long checks = 0;
    std::string failure;
    for (verify::Report const &r : reports) {
      checks += static_cast<long>(r.checks);
      if (!r.passed) {
        ok = false;
        failure = r.failure;
      }
    }
    if (c.limit_s > 0 && secs > c.limit_s) {
      ok = false;
      failure = "took longer than " + std::to_string(c.limit_s) + " s";
    }
    std::printf("criterion %d %-70s %s (%ld checks, %.2f s)\n", c.id, c.what.c_str(),
                ok ? "PASS" : "FAIL", checks, secs);
    if (!ok)
      std::printf("  %s\n", failure.c_str());
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
