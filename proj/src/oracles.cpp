#include "adlv/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace adlv::oracle {

int length_by_roots(WeylElement const &w)
{
  int const n = w.rank();
  WeylElement const u = finite_part(w);
  Cocharacter lambda{std::vector<int>(n), w.similitude()};
  for (int i = 0; i < n; ++i) {
    int v = w.window()[i] - u.window()[i];
    lambda.coords[i] = v / n;
  }

  int total = 0;
  for (Root a : positive_roots(n)) {
    int p = pairing(a, lambda);
    total += act(u, a).positive() ? std::abs(p) : std::abs(p + 1);
  }
  return total;
}

int length_by_xmy(WeylElement const &w)
{
  XmyDecomposition d = decompose_xmy(w);
  return length(d.x) + static_cast<int>(d.lambda.pairing_2rho()) - length(d.y);
}

bool bruhat_leq_subword(WeylElement const &u, WeylElement const &w)
{
  if (u.rank() != w.rank())
    return false;
  int const n = w.rank();
  ReducedWord rw = reduced_word(w);
  WeylElement tail = power(tau1(n), rw.omega) * WeylElement::identity(n, w.similitude());
  std::size_t const len = rw.letters.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    WeylElement v = WeylElement::identity(n);
    for (std::size_t i = 0; i < len; ++i)
      if ((mask >> i) & 1u)
        v = v * WeylElement::simple(n, rw.letters[i]);
    if (v * tail == u)
      return true;
  }
  return false;
}

std::vector<WeylElement> all_finite(int n)
{
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<WeylElement> res;
  do {
    res.push_back(WeylElement::finite(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return res;
}

std::vector<WeylElement> r_set_exhaustive(WeylElement const &w)
{
  RootSet const phi = phi_w(w);
  std::vector<WeylElement> res;
  for (WeylElement const &r : all_finite(w.rank())) {
    RootSet inv = inversion_set(r);
    if (std::includes(phi.begin(), phi.end(), inv.begin(), inv.end()))
      res.push_back(r.inverse());
  }
  return res;
}

void for_each_lp(WeylElement const &w, std::function<bool(WeylElement const &)> const &visit)
{
  int const n = w.rank();
  XmyDecomposition const d = decompose_xmy(w);
  WeylElement const xy = d.x * d.y;
  std::vector<int> const y(d.y.window().begin(), d.y.window().end());
  std::vector<int> const p(xy.window().begin(), xy.window().end());
  std::vector<int> const &mu = d.lambda.coords;

  // alpha = chi_{ij}, i < j, with v(i) = a and v(j) = b.
  auto ok = [&](int a, int b) {
    int pair = mu[y[a - 1] - 1] - mu[y[b - 1] - 1];
    int dv = a < b ? 1 : 0;
    int dxyv = p[a - 1] < p[b - 1] ? 1 : 0;
    return pair + dv - dxyv >= 0;
  };

  std::vector<int> v(n);
  std::vector<bool> used(n + 1, false);
  bool stop = false;
  std::function<void(int)> extend = [&](int j) {
    if (stop)
      return;
    if (j == n) {
      if (!visit(WeylElement::finite(v)))
        stop = true;
      return;
    }
    for (int bval = 1; bval <= n && !stop; ++bval) {
      if (used[bval])
        continue;
      bool good = true;
      for (int i = 0; i < j && good; ++i)
        good = ok(v[i], bval);
      if (!good)
        continue;
      used[bval] = true;
      v[j] = bval;
      extend(j + 1);
      used[bval] = false;
    }
  };
  extend(0);
}

std::vector<WeylElement> lp_set_direct(WeylElement const &w)
{
  std::vector<WeylElement> res;
  for_each_lp(w, [&](WeylElement const &v) {
    res.push_back(v);
    return true;
  });
  return res;
}

bool condition_ii_by_lp(WeylElement const &w)
{
  int const n = w.rank();
  WeylElement const p = finite_part(w);
  bool found = false;
  for_each_lp(w, [&](WeylElement const &v) {
    WeylElement c = sigma(v).inverse() * p * v;
    if (supp_sigma_finite(c).size() < n - 1) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

RefSet s_w_sigma_exhaustive(WeylElement const &w)
{
  int const n = w.rank();
  RefSet res(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n - 1)); ++bits) {
    RefSet candidate(n, bits << 1);
    auto image = twisted_image(w, candidate);
    if (image && *image == candidate)
      res = res | candidate;
  }
  return res;
}

bool in_affine_weyl_group(WeylElement const &w)
{
  return omega_component(w) == 0 && w.similitude() == 0;
}

WeylElement random_element(int n, int letters, int omega, std::mt19937_64 &rng)
{
  std::uniform_int_distribution<int> pick(0, n - 1);
  WeylElement res = WeylElement::identity(n);
  for (int i = 0; i < letters; ++i)
    res = res * WeylElement::simple(n, pick(rng));
  return res * power(tau1(n), omega);
}

} // namespace adlv::oracle
