#include "adlv/gu_strata.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>

#include "adlv/errors.hpp"
#include "adlv/roots.hpp"
#include "adlv/sigma_conj.hpp"

namespace adlv {

namespace {

RefSet index_range(int n, int lo, int hi)
{
  RefSet res(n);
  for (int i = std::max(lo, 1); i <= std::min(hi, n - 1); ++i)
    res.insert(i);
  return res;
}

void require_not_dl(int n, int k, int l)
{
  if (classify(n, k, l) != StratumClass::NotDL)
    throw NotApplicable(to_string(StratumLabel{k, l}) + " is not a non-DL stratum");
}

} // namespace

std::string to_string(StratumLabel const &label)
{
  return "w_{" + std::to_string(label.k) + "," + std::to_string(label.l) + "}";
}

std::string to_string(StratumClass c)
{
  switch (c) {
  case StratumClass::DL:
    return "dl";
  case StratumClass::NotDL:
    return "not_dl";
  case StratumClass::Empty:
    return "empty";
  }
  return "";
}

StratumClass class_from_string(std::string const &s)
{
  if (s == "dl")
    return StratumClass::DL;
  if (s == "not_dl")
    return StratumClass::NotDL;
  if (s == "empty")
    return StratumClass::Empty;
  throw Error("unknown stratum class '" + s + "'");
}

void check_label(int n, int k, int l)
{
  if (n < 2 || k < 1 || l <= k || l > n)
    throw LabelOutOfRange("label (" + std::to_string(k) + "," + std::to_string(l) +
                          ") out of range for n=" + std::to_string(n));
}

Cocharacter mu(int n)
{
  Cocharacter res{std::vector<int>(n, 0), -1};
  res.coords[n - 1] = -1;
  res.coords[n - 2] = -1;
  return res;
}

WeylElement b(int n)
{
  return WeylElement::identity(n, -1);
}

WeylElement tau(int n)
{
  return w_kl(n, 1, 2);
}

WeylElement s_range(int n, int a, int c)
{
  Word word;
  for (int i = a; i >= c; --i)
    word.push_back(i);
  return WeylElement::from_word(n, word);
}

WeylElement t(int n, int i)
{
  return WeylElement::simple(n, i) * WeylElement::simple(n, ((n - i) % n + n) % n);
}

WeylElement w_kl(int n, int k, int l)
{
  check_label(n, k, l);
  return translation(mu(n)) * s_range(n, n - 2, k) * s_range(n, n - 1, l);
}

std::set<StratumLabel> s_admissible(int n)
{
  std::set<StratumLabel> res;
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l)
      res.insert({k, l});
  return res;
}

std::set<StratumLabel> brute_force_s_adm(int n)
{
  if (n < 2 || n > 7)
    throw Error("brute_force_s_adm supports 2 <= n <= 7");

  std::map<WeylElement, StratumLabel> known;
  for (StratumLabel const &a : s_admissible(n))
    known.emplace(w_kl(n, a.k, a.l), a);

  std::set<WeylElement> below;
  Cocharacter const m = mu(n);
  std::vector<int> coords = m.coords;
  std::sort(coords.begin(), coords.end());
  do {
    WeylElement x = translation(Cocharacter{coords, m.similitude});
    ReducedWord rw = reduced_word(x);
    WeylElement tail = power(tau1(n), rw.omega) * WeylElement::identity(n, x.similitude());
    std::size_t const len = rw.letters.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
      WeylElement v = WeylElement::identity(n);
      for (std::size_t i = 0; i < len; ++i)
        if ((mask >> i) & 1u)
          v = v * WeylElement::simple(n, rw.letters[i]);
      v = v * tail;
      if (is_min_coset_rep(v))
        below.insert(v);
    }
  } while (std::next_permutation(coords.begin(), coords.end()));

  std::set<StratumLabel> res;
  for (WeylElement const &v : below) {
    auto it = known.find(v);
    if (it == known.end())
      throw Error("admissible element " + v.str() + " is not of the form w_{k,l}");
    res.insert(it->second);
  }
  return res;
}

StratumClass classify(int n, int k, int l)
{
  check_label(n, k, l);
  if (k == 1 || 2 * l <= n + 2)
    return StratumClass::DL;
  bool const window = 3 <= k && 2 * k < n + 2 && n + 2 < 2 * l && l <= n - 1;
  bool const odd_short = k % 2 == 1 && k + l <= n + 2;
  bool const parity_long = (l - n + 1) % 2 == 0 && k + l >= n + 3;
  if (window && (odd_short || parity_long))
    return StratumClass::NotDL;
  return StratumClass::Empty;
}

StratumClass classify_by_criterion(int n, int k, int l)
{
  WeylElement w = w_kl(n, k, l);
  if (!(supp_sigma(w) == RefSet::affine(n)))
    return StratumClass::DL;
  return is_empty_basic(w).empty ? StratumClass::Empty : StratumClass::NotDL;
}

StratumLabel w_prime(int n, int k, int l)
{
  require_not_dl(n, k, l);
  if (k + l <= n + 2)
    return {k - 2, l};
  if (k + l >= n + 4)
    return {k, l - 2};
  return {k - 1, l - 1};
}

int fibration_rank(int n, int k, int l)
{
  require_not_dl(n, k, l);
  if (k + l <= n + 2)
    return (k - 1) / 2;
  return k + (l - n - 3) / 2;
}

StratumLabel fibration_base(int n, int k, int l)
{
  require_not_dl(n, k, l);
  if (k + l <= n + 2)
    return {1, l};
  return {1, n - k + 2};
}

RefSet supp_sigma_closed(int n, int k, int l)
{
  check_label(n, k, l);
  if (k == 1 && 2 * l >= n + 3)
    return RefSet::affine(n) - RefSet::of(n, {n - 1});
  RefSet res(n);
  for (int i = 0; i <= l - 3; ++i) {
    res.insert(i % n);
    res.insert(((n - i - 2) % n + n) % n);
  }
  if (k >= 2)
    res.insert(n - 1);
  return res;
}

RefSet s_closed(int n, int k, int l)
{
  switch (classify(n, k, l)) {
  case StratumClass::Empty:
    throw NotApplicable(to_string(StratumLabel{k, l}) + " is empty");
  case StratumClass::NotDL:
    if (k + l <= n + 2)
      return index_range(n, n - l + 2, l - 3);
    return index_range(n, k, n - k - 1);
  case StratumClass::DL:
    break;
  }

  if (l == k + 1) {
    RefSet res = index_range(n, k, n - k - 2);
    if (k % 2 == 1) {
      for (int i = 1; i <= k - 2; i += 2)
        res.insert(i);
      for (int i = n - 1; i >= n - k; i -= 2)
        res.insert(i);
    }
    return res;
  }
  if (2 * l <= n + 2)
    return index_range(n, l - 1, n - l - 1);
  return index_range(n, n - l + 2, l - 3);
}

RefSet j_set(int n, int k, int l)
{
  require_not_dl(n, k, l);
  RefSet res(n);
  for (int i = 0; i <= k - 3; ++i) {
    res.insert(i);
    res.insert(n - i - 2);
  }
  res.insert(n - 1);
  if (k + l >= n + 3)
    res.insert(k - 2);
  return res;
}

RefSet parahoric_type(int n, int k, int l)
{
  switch (classify(n, k, l)) {
  case StratumClass::Empty:
    throw NotApplicable(to_string(StratumLabel{k, l}) + " is empty");
  case StratumClass::NotDL: {
    StratumLabel base = fibration_base(n, k, l);
    return parahoric_type(n, base.k, base.l);
  }
  case StratumClass::DL:
    break;
  }
  WeylElement w = w_kl(n, k, l);
  return (supp_sigma(w) | s_w_sigma(w)).shifted(1);
}

WeylElement w0_element(int n, int k, int l)
{
  WeylElement const t1 = tau1(n);
  return b(n).inverse() * t1 * w_kl(n, k, l) * sigma(t1).inverse();
}

int dim_stratum(int n, int k, int l)
{
  switch (classify(n, k, l)) {
  case StratumClass::Empty:
    throw NotApplicable(to_string(StratumLabel{k, l}) + " is empty");
  case StratumClass::DL:
    return k + l - 3;
  case StratumClass::NotDL:
    break;
  }
  StratumLabel next = w_prime(n, k, l);
  return dim_stratum(n, next.k, next.l) + 1;
}

int dim_X(int n)
{
  int res = 0;
  for (StratumLabel const &a : s_admissible(n))
    if (classify(n, a.k, a.l) != StratumClass::Empty)
      res = std::max(res, dim_stratum(n, a.k, a.l));
  return res;
}

std::set<StratumLabel> top_strata(int n)
{
  int const d = dim_X(n);
  std::set<StratumLabel> res;
  for (StratumLabel const &a : s_admissible(n))
    if (classify(n, a.k, a.l) != StratumClass::Empty && dim_stratum(n, a.k, a.l) == d)
      res.insert(a);
  return res;
}

int irr_orbit_count(int n)
{
  return static_cast<int>(top_strata(n).size());
}

bool closure_leq(StratumLabel const &a, StratumLabel const &b)
{
  return a.k <= b.k && a.l <= b.l;
}

bool geq_s_sigma(WeylElement const &w, WeylElement const &w2)
{
  int const n = w.rank();
  if (n != w2.rank())
    throw RankMismatch(n, w2.rank());
  if (n > 7)
    throw Error("geq_s_sigma supports n <= 7");

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    WeylElement u = WeylElement::finite(perm);
    if (bruhat_leq(u.inverse() * w2 * sigma(u), w))
      return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool positive_coxeter_closed(int n, int k, int l)
{
  require_not_dl(n, k, l);
  if (n % 2 == 1)
    return 2 * k == n + 1 || 2 * l == n + 3;
  return 2 * k == n || 2 * l == n + 4;
}

StratumRecord make_record(int n, int k, int l)
{
  WeylElement const w = w_kl(n, k, l);
  StratumRecord rec;
  rec.label = {k, l};
  rec.cls = classify(n, k, l);
  rec.length = length(w);
  rec.supp_sigma = supp_sigma(w);
  rec.s_w_sigma = s_w_sigma(w);
  rec.parahoric = RefSet(n);
  if (rec.cls == StratumClass::Empty)
    return rec;

  rec.dim = dim_stratum(n, k, l);
  rec.parahoric = parahoric_type(n, k, l);
  if (rec.cls == StratumClass::NotDL) {
    rec.target = w_prime(n, k, l);
    rec.rank = fibration_rank(n, k, l);
    rec.base = fibration_base(n, k, l);
    rec.positive_coxeter = positive_coxeter_closed(n, k, l);
    rec.j_set = j_set(n, k, l);
  }
  return rec;
}

std::vector<StratumRecord> all_records(int n)
{
  std::vector<std::future<StratumRecord>> jobs;
  for (StratumLabel const &a : s_admissible(n))
    jobs.push_back(std::async(std::launch::async, make_record, n, a.k, a.l));
  std::vector<StratumRecord> res;
  for (auto &job : jobs)
    res.push_back(job.get());
  return res;
}

StratumGraph stratum_graph(int n)
{
  StratumGraph g;
  g.n = n;
  for (StratumRecord &rec : all_records(n)) {
    if (rec.cls == StratumClass::Empty)
      continue;
    if (rec.target)
      g.edges.push_back({rec.label, *rec.target});
    g.nodes.push_back(std::move(rec));
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

} // namespace adlv
