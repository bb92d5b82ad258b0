#include "adlv/sigma_conj.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "adlv/errors.hpp"
#include "adlv/roots.hpp"

namespace adlv {

namespace {

WeylElement step(WeylElement const &w, int s)
{
  WeylElement sn = WeylElement::simple(w.rank(), s);
  return sn * w * sigma(sn);
}

std::vector<int> letter_list(int n, std::optional<RefSet> const &letters)
{
  return letters ? letters->indices() : RefSet::affine(n).indices();
}

struct Parent
{
  WeylElement from;
  int s;
};

// Length-preserving BFS from w. parents[e] = (p, s) with e = s p sigma(s).
struct ClassSearch
{
  std::vector<WeylElement> order;
  std::unordered_map<WeylElement, Parent> parents;
};

// Stops early once `stop` returns true for a newly reached element.
ClassSearch explore(WeylElement const &w, SearchBudget budget,
                    std::optional<RefSet> const &letters,
                    std::function<bool(WeylElement const &)> const &stop = {})
{
  int const n = w.rank();
  int const len = length(w);
  std::vector<int> const ls = letter_list(n, letters);

  ClassSearch res;
  std::unordered_set<WeylElement> seen{w};
  res.order.push_back(w);
  if (stop && stop(w))
    return res;
  for (std::size_t head = 0; head < res.order.size(); ++head) {
    WeylElement const cur = res.order[head];
    for (int s : ls) {
      WeylElement t = step(cur, s);
      if (length(t) != len || seen.contains(t))
        continue;
      seen.insert(t);
      if (budget.max_nodes != 0 && seen.size() > budget.max_nodes)
        throw BudgetExceeded("~-class search exceeded budget of " +
                             std::to_string(budget.max_nodes) + " elements");
      res.parents.emplace(t, Parent{cur, s});
      res.order.push_back(std::move(t));
      if (stop && stop(res.order.back()))
        return res;
    }
  }
  return res;
}

// Letters leading from the root of the search to e, written convention.
Word path_from_root(ClassSearch const &cs, WeylElement e)
{
  Word res;
  for (auto it = cs.parents.find(e); it != cs.parents.end();
       it = cs.parents.find(e)) {
    res.push_back(it->second.s);
    e = it->second.from;
  }
  return res;
}

} // namespace

ReductionArrow arrow(WeylElement const &w, int s)
{
  WeylElement t = step(w, s);
  int const lw = length(w);
  int const lt = length(t);
  if (lt > lw)
    throw IncreasingLength("s" + std::to_string(s) + " increases the length of " +
                           w.str());
  return {w, s, t, lt == lw ? ArrowKind::LengthPreserving : ArrowKind::LengthDropTwo};
}

ReductionArrow arrow(WeylElement const &w, int s, RefSet const &level)
{
  int const n = w.rank();
  if (level.contains(s))
    throw NotApplicable("s" + std::to_string(s) + " lies in " + level.str());
  if (!commutes_with_all(n, s, level))
    throw NotApplicable("s" + std::to_string(s) + " does not commute with " +
                        level.str());
  if (!(left_descents(w) & level).empty())
    throw NotApplicable(w.str() + " is not minimal in its W_J coset");
  std::optional<RefSet> image = twisted_image(w, level);
  if (!image || !(*image == level))
    throw NotApplicable("Ad(w) sigma does not stabilise " + level.str());
  return arrow(w, s);
}

bool commutes(int n, int i, int j)
{
  int d = (((i - j) % n) + n) % n;
  return d == 0 || (d != 1 && d != n - 1);
}

bool commutes_with_all(int n, int s, RefSet const &set)
{
  for (int j : set.indices())
    if (!commutes(n, s, j))
      return false;
  return true;
}

ChainResult verify_chain(WeylElement const &w, std::span<const int> steps,
                         WeylElement const &expected)
{
  ChainResult res;
  res.valid = true;
  WeylElement cur = w;
  res.lengths.push_back(length(cur));
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    WeylElement t = step(cur, *it);
    int lt = length(t);
    if (lt > res.lengths.back()) {
      res.valid = false;
      break;
    }
    cur = std::move(t);
    res.lengths.push_back(lt);
  }
  res.reached = res.valid && cur == expected;
  res.end = std::move(cur);
  return res;
}

SearchBudget SearchBudget::from_env()
{
  SearchBudget res;
  if (char const *env = std::getenv("ADLV_BFS_BUDGET")) {
    try {
      long long v = std::stoll(env);
      if (v > 0)
        res.max_nodes = static_cast<std::size_t>(v);
    } catch (std::exception const &) {
    }
  }
  return res;
}

std::vector<WeylElement> approx_class(WeylElement const &w, SearchBudget budget,
                                      std::optional<RefSet> letters)
{
  return explore(w, budget, letters).order;
}

bool approx_equiv(WeylElement const &w, WeylElement const &w2, SearchBudget budget)
{
  if (w.rank() != w2.rank())
    throw RankMismatch(w.rank(), w2.rank());
  if (length(w) != length(w2))
    return false;
  auto cls = approx_class(w, budget);
  return std::find(cls.begin(), cls.end(), w2) != cls.end();
}

std::optional<ReductionCertificate>
find_reduction(WeylElement const &w, WeylElement const &target,
               SearchBudget budget, std::optional<RefSet> letters)
{
  if (w.rank() != target.rank())
    throw RankMismatch(w.rank(), target.rank());
  int const lw = length(w);
  if (length(target) != lw - 2)
    throw std::invalid_argument("target must be two shorter than the source");

  ClassSearch const down = explore(target, budget, letters);
  std::unordered_set<WeylElement> const down_set(down.order.begin(),
                                                 down.order.end());
  std::vector<int> const ls = letter_list(w.rank(), letters);

  std::optional<int> found_s;
  WeylElement found_red;
  ClassSearch const up = explore(w, budget, letters, [&](WeylElement const &mid) {
    for (int s : ls) {
      WeylElement red = step(mid, s);
      if (down_set.contains(red) && length(red) == lw - 2) {
        found_s = s;
        found_red = std::move(red);
        return true;
      }
    }
    return false;
  });
  if (found_s) {
    WeylElement const &mid = up.order.back();
    Word back = path_from_root(down, found_red);
    std::reverse(back.begin(), back.end());
    return ReductionCertificate{path_from_root(up, mid), mid, *found_s, found_red, back};
  }
  return std::nullopt;
}

bool check_certificate(WeylElement const &w, WeylElement const &target,
                       ReductionCertificate const &cert)
{
  auto flat = [](std::vector<int> const &v) {
    return std::all_of(v.begin(), v.end(), [&](int x) { return x == v.front(); });
  };

  ChainResult first = verify_chain(w, cert.to_intermediate, cert.intermediate);
  if (!first.reached || !flat(first.lengths))
    return false;
  ReductionArrow a;
  try {
    a = arrow(cert.intermediate, cert.s);
  } catch (IncreasingLength const &) {
    return false;
  }
  if (a.kind != ArrowKind::LengthDropTwo || !(a.target == cert.reduced))
    return false;
  ChainResult second = verify_chain(cert.reduced, cert.to_target, target);
  return second.reached && flat(second.lengths);
}

std::optional<WeylElement> condition_ii_witness(WeylElement const &w,
                                                std::size_t max_nodes)
{
  int const n = w.rank();
  WeylElement const y_elem = decompose_xmy(w).y;
  auto y = y_elem.window();
  std::vector<int> rinv(n + 1);
  std::vector<int> c(n + 1);
  std::vector<char> in(n);
  std::optional<WeylElement> witness;

  // c = r y sigma(r)^{-1}, where sigma(r)^{-1} = w0 r^{-1} w0.
  for_each_r(
    w,
    [&](std::span<const int> r) {
      for (int a = 0; a < n; ++a)
        rinv[r[a]] = a + 1;
      for (int i = 1; i <= n; ++i)
        c[i] = r[y[n - rinv[n + 1 - i]] - 1];

      std::fill(in.begin(), in.end(), 0);
      int running_max = 0;
      for (int i = 1; i < n; ++i) {
        running_max = std::max(running_max, c[i]);
        if (running_max > i) {
          in[i] = 1;
          in[n - i] = 1;
        }
      }
      if (std::count(in.begin(), in.end(), 1) < n - 1) {
        witness = WeylElement::finite(r);
        return false;
      }
      return true;
    },
    max_nodes);
  return witness;
}

EmptinessVerdict is_empty_basic(WeylElement const &w, std::size_t max_nodes)
{
  if (!is_min_coset_rep(w))
    throw NotMinCosetRep(w.str() + " is not in ^S W~");
  if (!(supp_sigma(w) == RefSet::affine(w.rank())))
    return {};
  std::optional<WeylElement> witness = condition_ii_witness(w, max_nodes);
  if (!witness)
    return {};
  return {true, witness};
}

bool positive_coxeter_generic(WeylElement const &w)
{
  int const n = w.rank();
  XmyDecomposition const d = decompose_xmy(w);
  WeylElement const p = finite_part(w);
  int const orbit_count = static_cast<int>(twisted_orbits(n, 0).size()) - 1;

  bool found = false;
  for_each_r(w, [&](std::span<const int> r) {
    // v = y^{-1} r^{-1}
    WeylElement v = d.y.inverse() * WeylElement::finite(r).inverse();
    WeylElement c = sigma(v).inverse() * p * v;
    if (length(c) > orbit_count)
      return true;
    if (is_sigma_coxeter(c)) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

} // namespace adlv
