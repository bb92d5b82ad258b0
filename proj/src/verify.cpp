#include "adlv/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "adlv/errors.hpp"
#include "adlv/gu_strata.hpp"
#include "adlv/oracles.hpp"
#include "adlv/render.hpp"
#include "adlv/roots.hpp"
#include "adlv/sigma_conj.hpp"
#include "adlv_fixtures.hpp"

namespace adlv::verify {

namespace {

std::string at(int n, StratumLabel const &a)
{
  return "n=" + std::to_string(n) + " " + to_string(a);
}

RootSet complement_closed(int n, int k, int l)
{
  RootSet res;
  for (int i = 1; i <= k - 1; ++i)
    res.insert({i, n - 1});
  for (int i = 1; i <= l - 2; ++i)
    res.insert({i, n});
  return res;
}

RefSet union_closed(int n, int k, int l)
{
  RefSet res = RefSet::affine(n);
  if (k >= 2 || l == 2) {
    res.erase((l - 2) % n);
    res.erase((n - l) % n);
  } else if (2 * l <= n + 2) {
    res.erase(l - 2);
    res.erase(n - l);
    res.erase(n - 1);
  } else {
    res.erase(n - 1);
  }
  return res;
}

WeylElement twist(WeylElement const &w, int s)
{
  WeylElement sn = WeylElement::simple(w.rank(), s);
  return sn * w * sigma(sn);
}

// Applies the letters of a written chain (rightmost first) by explicit
// multiplication, requiring the length to stay at `len`.
bool replay_flat(WeylElement &cur, Word const &letters, int len)
{
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    cur = twist(cur, *it);
    if (length(cur) != len)
      return false;
  }
  return true;
}

bool replay_guarded(WeylElement cur, ReductionCertificate const &cert, RefSet const &level)
{
  try {
    for (auto it = cert.to_intermediate.rbegin(); it != cert.to_intermediate.rend(); ++it)
      cur = arrow(cur, *it, level).target;
    cur = arrow(cur, cert.s, level).target;
    for (auto it = cert.to_target.rbegin(); it != cert.to_target.rend(); ++it)
      cur = arrow(cur, *it, level).target;
  } catch (NotApplicable const &) {
    return false;
  }
  return true;
}

// Elements of W_a tau_1^omega of length at most max_len.
std::vector<WeylElement> short_elements(int n, int max_len, int omega)
{
  std::vector<WeylElement> res{power(tau1(n), omega)};
  std::unordered_set<WeylElement> seen(res.begin(), res.end());
  for (std::size_t head = 0; head < res.size(); ++head) {
    WeylElement const cur = res[head];
    if (length(cur) == max_len)
      continue;
    for (int s = 0; s < n; ++s) {
      WeylElement next = WeylElement::simple(n, s) * cur;
      if (length(next) == length(cur) + 1 && seen.insert(next).second)
        res.push_back(next);
    }
  }
  return res;
}

std::unordered_set<WeylElement> lower_interval(WeylElement const &w)
{
  int const n = w.rank();
  ReducedWord rw = reduced_word(w);
  WeylElement tail = power(tau1(n), rw.omega) * WeylElement::identity(n, w.similitude());
  std::unordered_set<WeylElement> res;
  std::size_t const len = rw.letters.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
    WeylElement v = WeylElement::identity(n);
    for (std::size_t i = 0; i < len; ++i)
      if ((mask >> i) & 1u)
        v = v * WeylElement::simple(n, rw.letters[i]);
    res.insert(v * tail);
  }
  return res;
}

} // namespace

void Report::expect(bool ok, std::string const &what)
{
  ++checks;
  if (!ok && passed) {
    passed = false;
    failure = what;
  }
}

Report oracle(int n_min, int n_max)
{
  Report r{"oracle"};
  for (int n = n_min; n <= n_max; ++n)
    for (StratumLabel const &a : s_admissible(n))
      r.expect(classify(n, a.k, a.l) == classify_by_criterion(n, a.k, a.l),
               at(n, a) + ": closed form and criterion disagree");
  return r;
}

Report figures()
{
  Report r{"figures"};
  for (auto const &[n, text] : {std::pair{13, fixtures::strata_n13}, std::pair{14, fixtures::strata_n14}}) {
    StratumGraph g = stratum_graph(n);
    r.expect(render_figure(g) == text, "n=" + std::to_string(n) + ": graph differs from the stored figure");

    for (StratumLabel const &a : s_admissible(n)) {
      StratumClass c = classify(n, a.k, a.l);
      WeylElement w = w_kl(n, a.k, a.l);
      bool full = supp_sigma(w) == RefSet::affine(n);
      if (c == StratumClass::DL)
        r.expect(!full, at(n, a) + ": DL label with full sigma-support");
      else if (c == StratumClass::NotDL)
        r.expect(full, at(n, a) + ": non-DL label with proper sigma-support");
      else
        r.expect(is_empty_basic(w).empty, at(n, a) + ": empty label without a criterion witness");
    }
  }
  return r;
}

Report closed_forms(int n_max)
{
  Report r{"closedforms"};
  for (int n = 2; n <= n_max; ++n) {
    for (StratumLabel const &a : s_admissible(n)) {
      int const k = a.k, l = a.l;
      std::string const here = at(n, a);
      WeylElement const w = w_kl(n, k, l);
      StratumClass const c = classify(n, k, l);

      r.expect(length(w) == k + l - 3, here + ": length");
      r.expect(is_min_coset_rep(w), here + ": not a minimal coset representative");

      RootSet phi = phi_w(w);
      RootSet complement;
      for (Root x : positive_roots(n))
        if (!phi.contains(x))
          complement.insert(x);
      r.expect(complement == complement_closed(n, k, l), here + ": Phi_+ minus Phi_w");

      RefSet const supp = supp_sigma(w);
      r.expect(supp == supp_sigma_closed(n, k, l), here + ": supp_sigma");
      r.expect((supp == RefSet::affine(n)) == (c != StratumClass::DL),
               here + ": DL iff proper sigma-support");
      if (c == StratumClass::Empty)
        continue;

      RefSet const swc = s_w_sigma(w);
      RefSet const closed = s_closed(n, k, l);
      r.expect(swc == closed, here + ": S(w,sigma)");
      auto image = twisted_image(w, closed);
      r.expect(image && *image == closed, here + ": S(w,sigma) not stable");

      RefSet const para = parahoric_type(n, k, l);
      WeylElement const w0 = w0_element(n, k, l);
      r.expect(oracle::in_affine_weyl_group(w0), here + ": w^0 outside W_a");

      if (c == StratumClass::DL) {
        r.expect(para == union_closed(n, k, l).shifted(1), here + ": parahoric type");
        if (para == RefSet::finite(n))
          r.expect(w0.is_finite(), here + ": w^0 not in W_0");
        continue;
      }

      r.expect(para == RefSet::finite(n), here + ": non-DL parahoric type is not S");
      StratumLabel const base = fibration_base(n, k, l);
      r.expect(w0_element(n, base.k, base.l).is_finite(), here + ": w^0 of the base not in W_0");

      RefSet const J = j_set(n, k, l);
      for (int j : J.indices()) {
        WeylElement sj = WeylElement::simple(n, j);
        for (int s : closed.indices()) {
          WeylElement ss = WeylElement::simple(n, s);
          r.expect(sj * ss == ss * sj, here + ": J does not commute with S(w,sigma)");
        }
      }

      StratumLabel const next = w_prime(n, k, l);
      r.expect(s_w_sigma(w_kl(n, next.k, next.l)) == swc, here + ": S(w',sigma) differs");

      StratumLabel cur = a;
      int steps = 0;
      while (classify(n, cur.k, cur.l) == StratumClass::NotDL && steps <= n) {
        cur = w_prime(n, cur.k, cur.l);
        ++steps;
      }
      r.expect(steps == fibration_rank(n, k, l), here + ": fibration rank");
      r.expect(cur == base, here + ": fibration base");
      r.expect(classify(n, cur.k, cur.l) == StratumClass::DL, here + ": base is not DL");
    }
  }
  return r;
}

Report dimensions(int n_max)
{
  Report r{"dimensions"};
  for (int n = 2; n <= n_max; ++n) {
    std::string const here = "n=" + std::to_string(n);
    r.expect(dim_X(n) == n - 2, here + ": dim X");
    r.expect(irr_orbit_count(n) == n / 2, here + ": component count");

    std::set<StratumLabel> expected{{1, n}};
    for (int k = 3; 2 * k <= n + 1; ++k)
      expected.insert({k, n - 1});
    if (n % 2 == 0 && n >= 4)
      expected.insert({n / 2, n / 2 + 1});
    r.expect(top_strata(n) == expected, here + ": top strata");
  }
  return r;
}

Report reductions(std::vector<int> const &ns)
{
  Report r{"reduction"};
  SearchBudget const budget = SearchBudget::from_env();
  for (int n : ns) {
    for (StratumLabel const &a : s_admissible(n)) {
      if (classify(n, a.k, a.l) != StratumClass::NotDL)
        continue;
      std::string const here = at(n, a);
      WeylElement const w = w_kl(n, a.k, a.l);
      StratumLabel const next = w_prime(n, a.k, a.l);
      WeylElement const target = w_kl(n, next.k, next.l);
      RefSet const J = j_set(n, a.k, a.l);

      std::optional<ReductionCertificate> cert;
      try {
        cert = find_reduction(w, target, budget, J);
      } catch (BudgetExceeded const &e) {
        r.expect(false, here + ": " + e.what());
        continue;
      }
      r.expect(cert.has_value(), here + ": no certificate");
      if (!cert)
        continue;
      r.expect(check_certificate(w, target, *cert), here + ": certificate rejected");

      int const len = length(w);
      WeylElement cur = w;
      bool ok = replay_flat(cur, cert->to_intermediate, len) && cur == cert->intermediate;
      cur = twist(cur, cert->s);
      ok = ok && length(cur) == len - 2 && cur == cert->reduced;
      ok = ok && replay_flat(cur, cert->to_target, len - 2) && cur == target;
      r.expect(ok, here + ": certificate does not replay");
      r.expect(replay_guarded(w, *cert, s_closed(n, a.k, a.l)),
               here + ": certificate leaves the parahoric level S(w,sigma)");
    }
  }

  WeylElement const w15 = w_kl(5, 1, 5);
  WeylElement const end = WeylElement::simple(5, 1) * tau(5);
  Word const letters{3, 0, 1};
  ChainResult chain = verify_chain(w15, letters, end);
  r.expect(chain.valid && chain.reached && chain.lengths == std::vector<int>{3, 3, 3, 1},
           "n=5 w_{1,5} -> s1 tau chain");
  return r;
}

Report emptiness(int n_max, int lp_n_max)
{
  Report r{"emptiness"};
  for (int n = 2; n <= n_max; ++n) {
    for (StratumLabel const &a : s_admissible(n)) {
      std::string const here = at(n, a);
      WeylElement const w = w_kl(n, a.k, a.l);

      if (n <= lp_n_max)
        r.expect(condition_ii_witness(w).has_value() == oracle::condition_ii_by_lp(w),
                 here + ": R-form and LP-form of condition (ii) disagree");

      if (classify(n, a.k, a.l) != StratumClass::Empty)
        continue;
      EmptinessVerdict v = is_empty_basic(w);
      r.expect(v.empty && v.witness, here + ": not found empty");
      if (!v.witness)
        continue;

      WeylElement const &rr = *v.witness;
      RootSet inv = inversion_set(rr);
      RootSet phi = phi_w(w);
      r.expect(std::includes(phi.begin(), phi.end(), inv.begin(), inv.end()),
               here + ": witness inversions leave Phi_w");
      WeylElement c = rr * decompose_xmy(w).y * sigma(rr).inverse();
      RefSet sc = supp_sigma_finite(c);
      r.expect(sc.is_subset_of(RefSet::finite(n)) && sc != RefSet::finite(n),
               here + ": witness support is all of S");
      r.expect(supp_sigma(w) == RefSet::affine(n), here + ": sigma-support is proper");
    }
  }
  return r;
}

Report positive_coxeter(int n_max)
{
  Report r{"positive_coxeter"};
  for (int n = 2; n <= n_max; ++n)
    for (StratumLabel const &a : s_admissible(n))
      if (classify(n, a.k, a.l) == StratumClass::NotDL)
        r.expect(positive_coxeter_closed(n, a.k, a.l) ==
                   positive_coxeter_generic(w_kl(n, a.k, a.l)),
                 at(n, a) + ": positive Coxeter flag");
  return r;
}

Report substrate()
{
  Report r{"substrate"};
  for (int n = 2; n <= 20; ++n) {
    std::string const here = "n=" + std::to_string(n);
    WeylElement const t1 = tau1(n);
    r.expect(t1.inverse() * b(n) * sigma(t1) == tau(n), here + ": tau_1^{-1} b sigma(tau_1) = tau");
    for (int i = 0; i < n; ++i) {
      WeylElement si = WeylElement::simple(n, i);
      r.expect(sigma(si) == WeylElement::simple(n, (n - i) % n), here + ": sigma(s_i)");
      if (n >= 3)
        r.expect(tau(n) * si * tau(n).inverse() == WeylElement::simple(n, ((i - 2) % n + n) % n),
                 here + ": tau s_i tau^{-1}");
    }
  }

  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> pick_n(2, 10), pick_len(0, 14), pick_omega(-3, 3);
  for (int trial = 0; trial < 10000; ++trial) {
    WeylElement w = oracle::random_element(pick_n(rng), pick_len(rng), pick_omega(rng), rng);
    int len = length(w);
    r.expect(len == oracle::length_by_roots(w) && len == oracle::length_by_xmy(w),
             "length formulas disagree on " + w.str());
  }

  for (int n = 2; n <= 6; ++n)
    r.expect(brute_force_s_adm(n) == s_admissible(n),
             "n=" + std::to_string(n) + ": admissible set");

  for (int n = 2; n <= 5; ++n) {
    for (int omega : {0, 1}) {
      std::vector<WeylElement> elems = short_elements(n, 5, omega);
      for (WeylElement const &w : elems) {
        auto lower = lower_interval(w);
        for (WeylElement const &u : elems)
          r.expect(bruhat_leq(u, w) == lower.contains(u),
                   "Bruhat order on " + u.str() + " <= " + w.str());
      }
    }
  }
  return r;
}

Report closure_order(int n_max)
{
  Report r{"closure"};
  for (int n = 2; n <= n_max; ++n) {
    std::vector<StratumLabel> dl;
    for (StratumLabel const &a : s_admissible(n))
      if (a.k >= 2 && classify(n, a.k, a.l) == StratumClass::DL)
        dl.push_back(a);
    for (StratumLabel const &hi : dl)
      for (StratumLabel const &lo : dl)
        r.expect(geq_s_sigma(w_kl(n, hi.k, hi.l), w_kl(n, lo.k, lo.l)) == closure_leq(lo, hi),
                 at(n, hi) + " vs " + to_string(lo) + ": closure order");
  }
  return r;
}

bool is_suite(std::string const &name)
{
  return name == "oracle" || name == "closedforms" || name == "reduction" ||
         name == "figures" || name == "all";
}

std::vector<Report> run_suite(std::string const &name, int n_max)
{
  auto cap = [&](int fallback) { return n_max > 0 ? n_max : fallback; };
  auto range = [](int lo, int hi) {
    std::vector<int> res;
    for (int n = lo; n <= hi; ++n)
      res.push_back(n);
    return res;
  };

  if (name == "oracle")
    return {oracle(2, cap(10))};
  if (name == "closedforms")
    return {closed_forms(cap(20)), dimensions(cap(20))};
  if (name == "reduction")
    return {reductions(range(2, cap(9)))};
  if (name == "figures")
    return {figures()};
  if (name == "all") {
    return {oracle(2, cap(10)),
            figures(),
            closed_forms(cap(20)),
            dimensions(cap(20)),
            reductions(range(2, std::min(cap(9), 9))),
            emptiness(cap(13), std::min(cap(9), 9)),
            positive_coxeter(std::min(cap(9), 9)),
            substrate(),
            closure_order(std::min(cap(7), 7))};
  }
  throw Error("unknown suite '" + name + "'");
}

} // namespace adlv::verify
