#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "adlv/errors.hpp"
#include "adlv/gu_strata.hpp"
#include "adlv/oracles.hpp"
#include "adlv/roots.hpp"

using namespace adlv;

namespace {

std::set<WeylElement> as_set(std::vector<WeylElement> const &v)
{
  return {v.begin(), v.end()};
}

RootSet complement(WeylElement const &w)
{
  RootSet phi = phi_w(w);
  RootSet res;
  for (Root a : positive_roots(w.rank()))
    if (!phi.contains(a))
      res.insert(a);
  return res;
}

RefSet pairs(int n, int hi)
{
  RefSet res(n);
  for (int i = 0; i <= hi; ++i) {
    res.insert(i);
    res.insert(n - i - 2);
  }
  return res;
}

} // namespace

TEST_SUITE("roots")
{
  TEST_CASE("root action")
  {
    WeylElement s1 = WeylElement::simple(5, 1);
    CHECK(act(s1, Root{1, 2}) == Root{2, 1});
    CHECK(delta_plus(Root{2, 1}) == 0);
    CHECK(delta_minus(Root{2, 1}) == 1);
    CHECK(act(WeylElement::identity(5), Root{1, 3}) == Root{1, 3});
    CHECK_THROWS_AS(act(WeylElement::simple(5, 0), Root{1, 2}), NotFinite);
  }

  TEST_CASE("Phi_w")
  {
    RootSet expected{{1, 4}, {2, 4}, {1, 5}, {2, 5}};
    CHECK(complement(w_kl(5, 3, 4)) == expected);
    CHECK(phi_w(WeylElement::identity(6)) == positive_roots(6));
    CHECK(complement(w_kl(13, 7, 12)).size() == 16);
  }

  TEST_CASE("R(w) and LP(w)")
  {
    for (int n = 2; n <= 5; ++n) {
      auto r = r_set(WeylElement::identity(n));
      CHECK(as_set(r) == as_set(oracle::all_finite(n)));
      CHECK(as_set(lp_set(WeylElement::identity(n))) == as_set(oracle::all_finite(n)));
    }

    WeylElement w = w_kl(5, 3, 4);
    auto r = r_set(w);
    CHECK(std::count(r.begin(), r.end(), WeylElement::identity(5)) == 1);
    CHECK(as_set(r) == as_set(oracle::r_set_exhaustive(w)));
    CHECK(r.size() == as_set(r).size());
    CHECK(as_set(lp_set(w)) == as_set(oracle::lp_set_direct(w)));

    for (int n = 2; n <= 7; ++n)
      for (StratumLabel const &a : s_admissible(n)) {
        WeylElement x = w_kl(n, a.k, a.l);
        CHECK(as_set(r_set(x)) == as_set(oracle::r_set_exhaustive(x)));
      }
  }

  TEST_CASE("LP(w) on random elements")
  {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> pick_n(2, 6), pick_len(0, 8), pick_omega(-2, 2);
    for (int trial = 0; trial < 200; ++trial) {
      WeylElement w = oracle::random_element(pick_n(rng), pick_len(rng), pick_omega(rng), rng);
      auto lp = as_set(lp_set(w));
      CHECK(lp == as_set(oracle::lp_set_direct(w)));
      CHECK(lp.contains(decompose_xmy(w).y.inverse()));
    }
  }

  TEST_CASE("supports")
  {
    CHECK(supp(WeylElement::identity(5)).empty());
    CHECK(supp_sigma(WeylElement::identity(5)).empty());
    CHECK(supp_sigma(w_kl(13, 3, 12)) == RefSet::affine(13));
    CHECK(supp_sigma(w_kl(13, 1, 7)) == pairs(13, 4));

    CHECK(supp_sigma_finite(WeylElement::identity(5)).empty());
    CHECK(supp_sigma_finite(WeylElement::simple(5, 1)) == RefSet::of(5, {1, 4}));
    CHECK(supp_sigma_finite(WeylElement::simple(5, 2) * WeylElement::simple(5, 3)) ==
          RefSet::of(5, {2, 3}));
    CHECK_THROWS_AS(supp_sigma_finite(tau1(5)), NotFinite);
  }

  TEST_CASE("supp_sigma is stable and minimal")
  {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<int> pick_n(3, 9), pick_len(0, 10), pick_omega(-3, 3);
    for (int trial = 0; trial < 1000; ++trial) {
      int n = pick_n(rng);
      WeylElement w = oracle::random_element(n, pick_len(rng), pick_omega(rng), rng);
      RefSet res = supp_sigma(w);
      int m = omega_component(w);
      CHECK(supp(w).is_subset_of(res));
      for (int i : res.indices())
        CHECK(res.contains(twisted_index(n, m, i)));

      // a random stable superset of supp(w) contains the result
      RefSet probe = supp(w);
      std::uniform_int_distribution<int> pick_i(0, n - 1);
      probe.insert(pick_i(rng));
      for (RefSet const &orbit : twisted_orbits(n, m))
        if (!(orbit & probe).empty())
          probe = probe | orbit;
      CHECK(res.is_subset_of(probe));
    }
  }

  TEST_CASE("S(w, sigma)")
  {
    for (int n = 2; n <= 8; ++n) {
      for (StratumLabel const &a : s_admissible(n)) {
        WeylElement w = w_kl(n, a.k, a.l);
        RefSet res = s_w_sigma(w);
        CHECK(res == oracle::s_w_sigma_exhaustive(w));
        auto image = twisted_image(w, res);
        REQUIRE(image);
        CHECK(*image == res);
      }
    }

    WeylElement t = tau(5);
    CHECK(s_w_sigma(t) == oracle::s_w_sigma_exhaustive(t));

    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> pick_n(2, 8), pick_len(0, 10), pick_omega(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
      WeylElement w = oracle::random_element(pick_n(rng), pick_len(rng), pick_omega(rng), rng);
      CHECK(s_w_sigma(w) == oracle::s_w_sigma_exhaustive(w));
    }
  }

  TEST_CASE("twisted orbits")
  {
    // Ad(tau) sigma for n odd: {s_{n-1}}, {s_0, s_{n-2}}, ..., {s_{(n-3)/2}, s_{(n-1)/2}}
    for (int n : {5, 7, 13}) {
      std::set<std::vector<int>> expected{{n - 1}};
      for (int i = 0; i <= (n - 3) / 2; ++i)
        expected.insert({i, n - 2 - i});
      std::set<std::vector<int>> got;
      for (RefSet const &o : twisted_orbits(n, omega_component(tau(n))))
        got.insert(o.indices());
      CHECK(got == expected);
    }
    // n even: {s_{n-1}}, {s_{n/2-1}}, and the pairs {s_i, s_{n-2-i}}
    for (int n : {6, 14}) {
      std::set<std::vector<int>> expected{{n - 1}, {n / 2 - 1}};
      for (int i = 0; i < n / 2 - 1; ++i)
        expected.insert({i, n - 2 - i});
      std::set<std::vector<int>> got;
      for (RefSet const &o : twisted_orbits(n, omega_component(tau(n))))
        got.insert(o.indices());
      CHECK(got == expected);
    }
  }

  TEST_CASE("sigma-Coxeter elements")
  {
    CHECK(is_sigma_coxeter(WeylElement::identity(5)));
    CHECK(is_sigma_coxeter(WeylElement::simple(5, 1) * tau(5)));
    CHECK_FALSE(is_sigma_coxeter(WeylElement::simple(5, 1) * WeylElement::simple(5, 4)));
    CHECK(is_sigma_coxeter(WeylElement::simple(5, 1) * WeylElement::simple(5, 2)));
  }
}
