#pragma once

// Extended affine Weyl group of GL_n with a detached similitude factor.
//
// Elements are extended affine permutations f : Z -> Z with
// f(i + n) = f(i) + n, stored by their window [f(1), ..., f(n)].
// Translations use the encoding f(i) = i + n * lambda_i and products are
// compositions, (a * b)(i) = a(b(i)). With these conventions
// s_0 = phi^{e_1 - e_n} (1 n) is the window [0, 2, ..., n-1, n+1].
//
// The similitude tag adds under multiplication and is fixed by the Frobenius.
// It never enters length, Bruhat order or supports.

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "adlv/refset.hpp"

namespace adlv {

using Word = std::vector<int>;

struct Cocharacter
{
  std::vector<int> coords;
  int similitude = 0;

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_dominant() const;
  /// <lambda, 2 rho> = sum over positive roots of <alpha, lambda>.
  long pairing_2rho() const;

  bool operator==(Cocharacter const &) const = default;
};

class WeylElement
{
public:
  WeylElement() = default;

  static WeylElement identity(int n, int similitude = 0);
  /// Throws InvalidElement if the residues mod n are not a permutation.
  static WeylElement from_window(std::vector<int> window, int similitude = 0);
  /// s_i for 0 <= i < n.
  static WeylElement simple(int n, int i);
  /// s_{a_1} s_{a_2} ... s_{a_r}
  static WeylElement from_word(int n, std::span<const int> word);
  /// A permutation of {1, ..., n} in one-line notation.
  static WeylElement finite(std::span<const int> perm);

  int rank() const { return static_cast<int>(_window.size()); }
  std::span<const int> window() const { return _window; }
  int similitude() const { return _similitude; }

  /// f(j) for any integer j.
  long long operator()(long long j) const;

  bool is_identity() const;
  /// True iff the translation part is zero, i.e. the element lies in W_0
  /// (similitude is ignored).
  bool is_finite() const;

  WeylElement inverse() const;

  /// "[f(1),...,f(n)];sim=c"
  std::string str() const;

  friend WeylElement operator*(WeylElement const &a, WeylElement const &b);

  bool operator==(WeylElement const &) const = default;
  auto operator<=>(WeylElement const &) const = default;

private:
  WeylElement(std::vector<int> window, int similitude)
  : _window(std::move(window)), _similitude(similitude)
  {}

  std::vector<int> _window;
  int _similitude = 0;
};

std::ostream &operator<<(std::ostream &os, WeylElement const &w);

/// phi^lambda
WeylElement translation(Cocharacter const &lambda);

/// tau_1 = phi^{(1,0,...,0)} s_1 s_2 ... s_{n-1}, the generator of Omega.
WeylElement tau1(int n);

/// w^m for any integer m.
WeylElement power(WeylElement const &w, int m);

/// Coxeter length, computed as the number of affine inversions
/// #{(i, j) : 1 <= i <= n, j > i, f(i) > f(j)}.
int length(WeylElement const &w);

/// Frobenius: window g(i) = n + 1 - f(n + 1 - i). An involutive
/// length-preserving automorphism with sigma(s_i) = s_{n-i}.
WeylElement sigma(WeylElement const &w);

/// The integer m with w in W_a tau_1^m.
int omega_component(WeylElement const &w);

struct AffinePart
{
  /// w * tau_1^{-m} with similitude stripped; lies in W_a.
  WeylElement element;
  int omega = 0;
  int similitude = 0;
};

AffinePart affine_part(WeylElement const &w);

bool is_left_descent(WeylElement const &w, int i);
RefSet left_descents(WeylElement const &w);

struct ReducedWord
{
  Word letters;
  int omega = 0;
};

/// w = s_{a_1} ... s_{a_r} tau_1^omega (times the similitude) with r = l(w).
ReducedWord reduced_word(WeylElement const &w);

/// Bruhat order. Elements of different Omega-cosets (or similitudes) are
/// incomparable.
bool bruhat_leq(WeylElement const &u, WeylElement const &w);

/// Membership in ^S W~: no finite simple reflection is a left descent.
bool is_min_coset_rep(WeylElement const &w);

/// p(w), the image in W_0.
WeylElement finite_part(WeylElement const &w);

/// Unique factorisation w = x phi^lambda y with lambda dominant, x, y in W_0
/// and phi^lambda y in ^S W~. The similitude is carried by lambda.
struct XmyDecomposition
{
  WeylElement x;
  Cocharacter lambda;
  WeylElement y;
};

XmyDecomposition decompose_xmy(WeylElement const &w);

/// Returns i if w equals s_i (similitude 0), otherwise -1.
int simple_index(WeylElement const &w);

/// Ad(w) sigma(s_i) = w sigma(s_i) w^{-1}.
WeylElement twisted_conjugate(WeylElement const &w, int i);

} // namespace adlv

template<>
struct std::hash<adlv::WeylElement>
{
  std::size_t operator()(adlv::WeylElement const &w) const noexcept;
};
