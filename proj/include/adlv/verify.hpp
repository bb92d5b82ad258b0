#pragma once

// Verification batteries shared by the command-line tool and the acceptance
// runner. Each returns a report naming the first counterexample it met.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace adlv::verify {

struct Report
{
  explicit Report(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::string failure;

  /// Counts a check; records the first failing one.
  void expect(bool ok, std::string const &what);
};

/// classify against classify_by_criterion for every label, n in [n_min, n_max].
Report oracle(int n_min, int n_max);

/// Node and edge lists of the n = 13 and n = 14 graphs against the stored
/// figures, with every empty label confirmed by a criterion witness and
/// every DL label by its sigma-support.
Report figures();

/// Lengths, Phi_w, supports, S(w, sigma), J-sets, fibration chains,
/// parahoric types and w^0 against their closed forms, n in [2, n_max].
Report closed_forms(int n_max);

/// dim X, the component count and the top strata, n in [2, n_max].
Report dimensions(int n_max);

/// Reduction certificates w_{k,l} -> w'_{k,l} for every non-DL label with
/// n in `ns`, replayed arrow by arrow and through the parahoric guard, plus
/// the chain w_{1,5} -> s_1 tau at n = 5.
Report reductions(std::vector<int> const &ns);

/// Witnesses for every empty label with n <= n_max, and agreement of the two
/// forms of the second emptiness condition on all labels with n <= lp_n_max.
Report emptiness(int n_max, int lp_n_max);

/// Closed-form positive Coxeter flag against the LP search, n <= n_max.
Report positive_coxeter(int n_max);

/// Group identities, length formulas, admissible set and Bruhat order.
Report substrate();

/// geq_{S,sigma} against the componentwise order on DL pairs with k, k' >= 2.
Report closure_order(int n_max);

/// Suites by name: oracle, closedforms, reduction, figures, all.
bool is_suite(std::string const &name);
std::vector<Report> run_suite(std::string const &name, int n_max);

} // namespace adlv::verify
