#pragma once

// Slow, definition-level reimplementations used to cross-check the fast
// algorithms. Everything here enumerates W_0 or subwords directly.

#include <functional>
#include <random>
#include <vector>

#include "adlv/refset.hpp"
#include "adlv/roots.hpp"
#include "adlv/weyl.hpp"

namespace adlv::oracle {

/// l(u phi^lambda) = sum over inversions of u of |<a, lambda> + 1| plus the
/// sum over the other positive roots of |<a, lambda>|.
int length_by_roots(WeylElement const &w);

/// l(x) + <mu, 2 rho> - l(y) for w = x phi^mu y.
int length_by_xmy(WeylElement const &w);

/// u <= w via subwords of a reduced word of w.
bool bruhat_leq_subword(WeylElement const &u, WeylElement const &w);

/// All of W_0 in lexicographic one-line order.
std::vector<WeylElement> all_finite(int n);

/// R(w) by filtering all of W_0.
std::vector<WeylElement> r_set_exhaustive(WeylElement const &w);

/// Visits every v in W_0 with <v a, y^{-1} mu> + delta^+(v a) - delta^+(x y v a) >= 0
/// for all positive a, by backtracking over one-line prefixes. The visitor
/// returns false to stop.
void for_each_lp(WeylElement const &w, std::function<bool(WeylElement const &)> const &visit);
std::vector<WeylElement> lp_set_direct(WeylElement const &w);

/// Condition (ii) of the emptiness criterion in its LP form: some v in LP(w)
/// has supp_sigma(sigma(v)^{-1} p(w) v) properly inside S.
bool condition_ii_by_lp(WeylElement const &w);

/// Union of all Ad(w) sigma-stable subsets of S, found by trying each one.
RefSet s_w_sigma_exhaustive(WeylElement const &w);

/// Omega-component and similitude both vanish.
bool in_affine_weyl_group(WeylElement const &w);

/// A random product of `letters` simple reflections times tau_1^omega.
WeylElement random_element(int n, int letters, int omega, std::mt19937_64 &rng);

} // namespace adlv::oracle
