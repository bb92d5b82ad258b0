#pragma once

// Root-system combinatorics of GL_n: Phi_w, R(w), LP(w), supports and
// sigma-supports, S(w, sigma), and sigma-Coxeter detection.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "adlv/refset.hpp"
#include "adlv/weyl.hpp"

namespace adlv {

/// chi_{ij}: diag(t_1, ..., t_n) -> t_i / t_j. Positive iff i < j.
struct Root
{
  int i = 1;
  int j = 2;

  bool positive() const { return i < j; }
  Root negated() const { return {j, i}; }

  auto operator<=>(Root const &) const = default;
};

using RootSet = std::set<Root>;

RootSet positive_roots(int n);

/// u chi_{ij} = chi_{u(i) u(j)}; throws NotFinite unless u lies in W_0.
Root act(WeylElement const &u, Root r);

inline int delta_plus(Root r) { return r.positive() ? 1 : 0; }
inline int delta_minus(Root r) { return r.positive() ? 0 : 1; }

/// <chi_{ij}, lambda> = lambda_i - lambda_j.
inline int pairing(Root r, Cocharacter const &lambda)
{
  return lambda.coords[r.i - 1] - lambda.coords[r.j - 1];
}

/// Inv(u) = {alpha > 0 : u alpha < 0} for u in W_0.
RootSet inversion_set(WeylElement const &u);

/// Phi_w = {alpha > 0 : <alpha, mu> - delta^-(y^{-1} alpha) + delta^-(x alpha) = 0}
/// for w = x phi^mu y.
RootSet phi_w(WeylElement const &w);

/// Visits every r in W_0 with Inv(r) contained in Phi_w, each exactly once,
/// in order of increasing length. The visitor gets r in one-line notation and
/// returns false to stop. Returns the number of elements visited; throws
/// BudgetExceeded once more than `max_nodes` elements would be visited
/// (0 means unlimited).
std::size_t for_each_r(WeylElement const &w,
                       std::function<bool(std::span<const int>)> const &visit,
                       std::size_t max_nodes = 0);

/// R(w) = {r^{-1} : r(Phi_+ \ Phi_w) in Phi_+}, i.e. the inverses of the
/// elements visited by for_each_r.
std::vector<WeylElement> r_set(WeylElement const &w);

/// LP(w) = y^{-1} R(w) where w = x phi^mu y.
std::vector<WeylElement> lp_set(WeylElement const &w);

/// Letters of a reduced word of the W_a-part of w.
RefSet supp(WeylElement const &w);

/// Image of s_i under Ad(tau_1^m) sigma, namely s_{n - i + m mod n}.
int twisted_index(int n, int m, int i);

/// Orbits of Ad(tau_1^m) sigma on S~, each as a RefSet, ordered by their
/// smallest index.
std::vector<RefSet> twisted_orbits(int n, int m);

/// Smallest Ad(tau_1^m) sigma-stable subset of S~ containing supp(w), where
/// m is the Omega-component of w.
RefSet supp_sigma(WeylElement const &w);

/// Smallest sigma-stable subset of S containing supp(u), u in W_0.
RefSet supp_sigma_finite(WeylElement const &u);

/// S(w, sigma) = max{S' in S : Ad(w) sigma(S') = S'}.
RefSet s_w_sigma(WeylElement const &w);

/// Image of a set of simple reflections under Ad(w) sigma, or nullopt when
/// some image is not a simple reflection.
std::optional<RefSet> twisted_image(WeylElement const &w, RefSet const &set);

/// One reduced word of the W_a-part has exactly one letter from each
/// Ad(tau_1^m) sigma-orbit meeting the support.
bool is_sigma_coxeter(WeylElement const &w);

} // namespace adlv
