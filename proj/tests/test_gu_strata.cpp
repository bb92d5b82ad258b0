#include <doctest.h>

#include <algorithm>

#include "adlv/errors.hpp"
#include "adlv/gu_strata.hpp"
#include "adlv/oracles.hpp"
#include "adlv/roots.hpp"
#include "adlv/sigma_conj.hpp"

using namespace adlv;

TEST_SUITE("gu_strata")
{
  TEST_CASE("w_{k,l}")
  {
    CHECK(length(w_kl(5, 1, 5)) == 3);
    CHECK(length(w_kl(13, 4, 10)) == 11);
    CHECK(length(tau(7)) == 0);
    CHECK(omega_component(w_kl(9, 2, 6)) == -2);
    CHECK(w_kl(9, 2, 6).similitude() == -1);

    Word word{0, 1, 2, 3, 4, 5, 6, 7, 12, 0, 1};
    CHECK(w_kl(13, 4, 10) == WeylElement::from_word(13, word) * tau(13));

    for (int n = 2; n <= 12; ++n)
      for (StratumLabel const &a : s_admissible(n)) {
        WeylElement w = w_kl(n, a.k, a.l);
        CHECK(length(w) == a.k + a.l - 3);
        CHECK(is_min_coset_rep(w));
      }

    CHECK(t(5, 1) == WeylElement::simple(5, 1) * WeylElement::simple(5, 4));
    CHECK(s_range(5, 1, 3) == WeylElement::identity(5));
    CHECK(s_range(5, 3, 1) == WeylElement::from_word(5, Word{3, 2, 1}));
  }

  TEST_CASE("labels")
  {
    CHECK(s_admissible(2).size() == 1);
    CHECK(s_admissible(5).size() == 10);
    CHECK(s_admissible(13).size() == 78);
    CHECK(to_string(StratumLabel{3, 12}) == "w_{3,12}");
    CHECK_THROWS_AS(w_kl(5, 3, 3), LabelOutOfRange);
    CHECK_THROWS_AS(w_kl(5, 0, 2), LabelOutOfRange);
    CHECK_THROWS_AS(w_kl(5, 2, 6), LabelOutOfRange);
    CHECK_THROWS_AS(classify(1, 1, 2), LabelOutOfRange);
    CHECK(class_from_string("not_dl") == StratumClass::NotDL);
    CHECK_THROWS_AS(class_from_string("maybe"), Error);
  }

  TEST_CASE("admissible set by brute force")
  {
    for (int n = 2; n <= 6; ++n)
      CHECK(brute_force_s_adm(n) == s_admissible(n));
    CHECK_THROWS_AS(brute_force_s_adm(8), Error);
  }

  TEST_CASE("classification")
  {
    CHECK(classify(13, 4, 10) == StratumClass::Empty);
    CHECK(classify(13, 7, 12) == StratumClass::NotDL);
    CHECK(classify(13, 3, 12) == StratumClass::NotDL);
    CHECK(classify(13, 1, 13) == StratumClass::DL);
    CHECK(classify(5, 3, 4) == StratumClass::NotDL);
    CHECK(classify(2, 1, 2) == StratumClass::DL);

    for (int n = 2; n <= 9; ++n)
      for (StratumLabel const &a : s_admissible(n)) {
        CAPTURE(n);
        CAPTURE(a.k);
        CAPTURE(a.l);
        CHECK(classify(n, a.k, a.l) == classify_by_criterion(n, a.k, a.l));
      }
  }

  TEST_CASE("fibration data")
  {
    CHECK(w_prime(13, 7, 12) == StratumLabel{7, 10});
    CHECK(fibration_rank(13, 7, 12) == 5);
    CHECK(fibration_base(13, 7, 12) == StratumLabel{1, 8});
    CHECK(w_prime(13, 3, 12) == StratumLabel{1, 12});
    CHECK(w_prime(14, 4, 13) == StratumLabel{3, 12});

    CHECK_THROWS_AS(w_prime(13, 1, 10), NotApplicable);
    CHECK_THROWS_AS(fibration_rank(13, 4, 10), NotApplicable);
    CHECK_THROWS_AS(fibration_base(13, 1, 2), NotApplicable);
    CHECK_THROWS_AS(j_set(13, 4, 10), NotApplicable);
    CHECK_THROWS_AS(positive_coxeter_closed(13, 1, 10), NotApplicable);

    // following w' ends at the base after `rank` steps
    for (int n = 5; n <= 20; ++n)
      for (StratumLabel const &a : s_admissible(n)) {
        if (classify(n, a.k, a.l) != StratumClass::NotDL)
          continue;
        StratumLabel cur = a;
        int steps = 0;
        while (classify(n, cur.k, cur.l) == StratumClass::NotDL) {
          cur = w_prime(n, cur.k, cur.l);
          ++steps;
        }
        CHECK(cur == fibration_base(n, a.k, a.l));
        CHECK(steps == fibration_rank(n, a.k, a.l));
      }
  }

  TEST_CASE("supports and S(w, sigma)")
  {
    CHECK(s_closed(13, 1, 10) == RefSet::of(13, {5, 6, 7}));
    CHECK(s_closed(13, 7, 8).empty());
    CHECK(j_set(13, 3, 12) == RefSet::of(13, {0, 11, 12}));
    CHECK_THROWS_AS(s_closed(13, 4, 10), NotApplicable);

    for (int n = 2; n <= 14; ++n)
      for (StratumLabel const &a : s_admissible(n))
        CHECK(supp_sigma_closed(n, a.k, a.l) == supp_sigma(w_kl(n, a.k, a.l)));

    for (int n = 2; n <= 12; ++n)
      for (StratumLabel const &a : s_admissible(n)) {
        if (classify(n, a.k, a.l) == StratumClass::Empty)
          continue;
        RefSet S = s_closed(n, a.k, a.l);
        CHECK(S.is_subset_of(RefSet::finite(n)));
      }
  }

  TEST_CASE("dimensions")
  {
    CHECK(dim_X(13) == 11);
    CHECK(irr_orbit_count(13) == 6);
    CHECK(dim_stratum(13, 1, 13) == 11);
    CHECK(dim_stratum(13, 7, 12) == dim_stratum(13, 7, 10) + 1);
    CHECK_THROWS_AS(dim_stratum(13, 4, 10), NotApplicable);

    for (StratumLabel const &a : top_strata(13))
      CHECK(dim_stratum(13, a.k, a.l) == 11);
    CHECK(dim_X(2) == 0);
    CHECK(top_strata(2) == std::set<StratumLabel>{{1, 2}});
  }

  TEST_CASE("graph for n=5")
  {
    StratumGraph g = stratum_graph(5);
    CHECK(g.n == 5);
    CHECK(g.nodes.size() == 6);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges.front() == StratumEdge{{3, 4}, {1, 4}});
    CHECK(std::is_sorted(g.nodes.begin(), g.nodes.end(),
                         [](auto const &a, auto const &b) { return a.label < b.label; }));

    StratumGraph g2 = stratum_graph(2);
    CHECK(g2.nodes.size() == 1);
    CHECK(g2.edges.empty());

    CHECK(stratum_graph(13).nodes.size() == 42);
    CHECK(stratum_graph(13).edges.size() == 15);
  }

  TEST_CASE("records")
  {
    StratumRecord r = make_record(13, 7, 12);
    CHECK(r.cls == StratumClass::NotDL);
    CHECK(r.length == 16);
    CHECK(r.dim == dim_stratum(13, 7, 12));
    CHECK(r.target == StratumLabel{7, 10});
    CHECK(r.rank == 5);
    CHECK(r.base == StratumLabel{1, 8});
    CHECK(r.positive_coxeter);
    CHECK(r.j_set.has_value());

    StratumRecord e = make_record(13, 4, 10);
    CHECK(e.cls == StratumClass::Empty);
    CHECK_FALSE(e.dim.has_value());
    CHECK_FALSE(e.j_set.has_value());

    CHECK(all_records(6).size() == s_admissible(6).size());
  }

  TEST_CASE("parahoric type and w0")
  {
    CHECK(w0_element(5, 1, 5).is_finite());
    CHECK(w0_element(5, 1, 5).similitude() == 0);
    CHECK(omega_component(w0_element(5, 1, 5)) == 0);

    for (int n = 3; n <= 10; ++n)
      for (StratumLabel const &a : s_admissible(n)) {
        StratumClass c = classify(n, a.k, a.l);
        if (c == StratumClass::Empty) {
          CHECK_THROWS_AS(parahoric_type(n, a.k, a.l), NotApplicable);
          continue;
        }
        RefSet P = parahoric_type(n, a.k, a.l);
        CHECK(P.rank() == n);
        CHECK(oracle::in_affine_weyl_group(w0_element(n, a.k, a.l)));
        if (c == StratumClass::NotDL) {
          StratumLabel base = fibration_base(n, a.k, a.l);
          CHECK(P == parahoric_type(n, base.k, base.l));
          CHECK(P == RefSet::finite(n));
          CHECK(w0_element(n, base.k, base.l).is_finite());
        } else if (P == RefSet::finite(n)) {
          CHECK(w0_element(n, a.k, a.l).is_finite());
        }
      }
  }

  TEST_CASE("closure order")
  {
    CHECK(closure_leq({1, 4}, {3, 4}));
    CHECK(closure_leq({3, 4}, {3, 4}));
    CHECK_FALSE(closure_leq({3, 4}, {2, 5}));
    CHECK_THROWS_AS(geq_s_sigma(w_kl(8, 1, 2), w_kl(8, 1, 3)), Error);

    for (int n = 3; n <= 6; ++n) {
      std::vector<StratumLabel> dl;
      for (StratumLabel const &a : s_admissible(n))
        if (a.k >= 2 && classify(n, a.k, a.l) == StratumClass::DL)
          dl.push_back(a);
      for (StratumLabel const &a : dl)
        for (StratumLabel const &b : dl)
          CHECK(closure_leq(a, b) == geq_s_sigma(w_kl(n, b.k, b.l), w_kl(n, a.k, a.l)));
    }
  }
}
