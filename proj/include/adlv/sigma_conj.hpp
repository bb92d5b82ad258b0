#pragma once

// Deligne-Lusztig reduction calculus at the level of words: arrows
// w -> s w sigma(s), the relations -> and ~, certificate search, and the
// emptiness criterion for basic b.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "adlv/refset.hpp"
#include "adlv/weyl.hpp"

namespace adlv {

enum class ArrowKind
{
  LengthPreserving,
  LengthDropTwo,
};

struct ReductionArrow
{
  WeylElement source;
  int s = 0;
  WeylElement target;
  ArrowKind kind = ArrowKind::LengthPreserving;
};

/// w -> s w sigma(s). Throws IncreasingLength if the length would go up.
ReductionArrow arrow(WeylElement const &w, int s);

/// Arrow at parahoric level J: additionally requires w in ^J W~,
/// Ad(w) sigma(J) = J, s outside J and commuting with every element of J.
/// Throws NotApplicable when the guard fails.
ReductionArrow arrow(WeylElement const &w, int s, RefSet const &level);

/// s_i and s_j commute (as elements of W_a).
bool commutes(int n, int i, int j);
bool commutes_with_all(int n, int s, RefSet const &set);

struct ChainResult
{
  bool valid = false;   ///< every step was a legal arrow
  bool reached = false; ///< the final element equals the expected one
  std::vector<int> lengths;
  WeylElement end;
};

/// Applies w ->^{s_k ... s_1 s_0} with the letters listed as written, i.e.
/// the rightmost letter is applied first.
ChainResult verify_chain(WeylElement const &w, std::span<const int> steps,
                         WeylElement const &expected);

struct SearchBudget
{
  std::size_t max_nodes = 1'000'000;

  /// The default budget, overridden by the ADLV_BFS_BUDGET environment
  /// variable when set.
  static SearchBudget from_env();
};

/// All elements reachable from w by length-preserving arrows, optionally
/// restricted to letters in `letters`. Throws BudgetExceeded.
std::vector<WeylElement> approx_class(WeylElement const &w, SearchBudget budget,
                                      std::optional<RefSet> letters = std::nullopt);

/// w ~ w2. Throws BudgetExceeded instead of answering false when the class
/// of w is larger than the budget.
bool approx_equiv(WeylElement const &w, WeylElement const &w2,
                  SearchBudget budget = SearchBudget::from_env());

/// Word-level witness of w ~ w'' ->^s s w'' sigma(s) ~ target with
/// l(s w'' sigma(s)) = l(w) - 2. Both chains are stored in the written
/// convention accepted by verify_chain.
struct ReductionCertificate
{
  Word to_intermediate;
  WeylElement intermediate;
  int s = 0;
  WeylElement reduced;
  Word to_target;
};

/// Throws std::invalid_argument unless l(target) = l(w) - 2, BudgetExceeded
/// when a class outgrows the budget.
std::optional<ReductionCertificate>
find_reduction(WeylElement const &w, WeylElement const &target,
               SearchBudget budget = SearchBudget::from_env(),
               std::optional<RefSet> letters = std::nullopt);

/// Replays a certificate arrow by arrow.
bool check_certificate(WeylElement const &w, WeylElement const &target,
                       ReductionCertificate const &cert);

struct EmptinessVerdict
{
  bool empty = false;
  /// r in W_0 with Inv(r) in Phi_w and supp_sigma(r y sigma(r)^{-1}) a proper
  /// subset of S; present iff empty.
  std::optional<WeylElement> witness;
};

/// Condition (ii) of the emptiness criterion on its own: the first r found
/// with Inv(r) in Phi_w and supp_sigma(r y sigma(r)^{-1}) properly inside S.
std::optional<WeylElement> condition_ii_witness(WeylElement const &w,
                                                std::size_t max_nodes = 0);

/// Emptiness of X_w(b) for basic b, for w = phi^mu y in ^S W~: empty iff
/// supp_sigma(w) = S~ and some r^{-1} in R(w) has
/// supp_sigma(r y sigma(r)^{-1}) properly inside S.
/// Throws NotMinCosetRep.
EmptinessVerdict is_empty_basic(WeylElement const &w, std::size_t max_nodes = 0);

/// Some v in LP(w) makes sigma^{-1}(v)^{-1} p(w) v a sigma-Coxeter element.
bool positive_coxeter_generic(WeylElement const &w);

} // namespace adlv
