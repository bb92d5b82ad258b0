#include "adlv/roots.hpp"

#include <algorithm>

#include "adlv/errors.hpp"

namespace adlv {

RootSet positive_roots(int n)
{
  RootSet res;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      res.insert({i, j});
  return res;
}

Root act(WeylElement const &u, Root r)
{
  if (!u.is_finite())
    throw NotFinite("root action needs an element of W_0");
  auto f = u.window();
  return {f[r.i - 1], f[r.j - 1]};
}

RootSet inversion_set(WeylElement const &u)
{
  RootSet res;
  for (Root a : positive_roots(u.rank()))
    if (!act(u, a).positive())
      res.insert(a);
  return res;
}

RootSet phi_w(WeylElement const &w)
{
  XmyDecomposition d = decompose_xmy(w);
  WeylElement y_inv = d.y.inverse();
  RootSet res;
  for (Root a : positive_roots(w.rank())) {
    int v = pairing(a, d.lambda) - delta_minus(act(y_inv, a)) +
            delta_minus(act(d.x, a));
    if (v == 0)
      res.insert(a);
  }
  return res;
}

std::size_t for_each_r(WeylElement const &w,
                       std::function<bool(std::span<const int>)> const &visit,
                       std::size_t max_nodes)
{
  // Tree enumeration of the order ideal {r : Inv(r) in Phi_w}: the parent of
  // r != 1 is s r for the smallest left descent s of r. Left multiplication
  // by s_i adds the single inversion r^{-1} alpha_i, so every prefix stays in
  // the ideal and no visited set is needed.
  int const n = w.rank();
  std::vector<char> allowed(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  for (Root a : phi_w(w))
    allowed[a.i * (n + 1) + a.j] = 1;

  std::vector<int> level(n);
  for (int i = 0; i < n; ++i)
    level[i] = i + 1;

  std::size_t visited = 1;
  if (max_nodes != 0 && visited > max_nodes)
    throw BudgetExceeded("R(w) enumeration exceeded budget");
  if (!visit(std::span<const int>(level.data(), n)))
    return visited;

  std::vector<int> next;
  std::vector<int> inv(n + 2);
  while (!level.empty()) {
    next.clear();
    std::size_t const count = level.size() / n;
    for (std::size_t e = 0; e < count; ++e) {
      int const *r = level.data() + e * n;
      for (int a = 0; a < n; ++a)
        inv[r[a]] = a + 1;

      int first_descent = n;
      for (int j = 1; j < n; ++j) {
        if (inv[j] > inv[j + 1]) {
          first_descent = j;
          break;
        }
      }

      // s_i r has smallest left descent i only if r has no left descent
      // below i - 1.
      int const last = std::min(n - 1, first_descent + 1);
      for (int i = 1; i <= last; ++i) {
        if (inv[i] > inv[i + 1])
          continue;
        if (!allowed[inv[i] * (n + 1) + inv[i + 1]])
          continue;
        if (i >= 2 && inv[i - 1] > inv[i + 1])
          continue;

        std::size_t const base = next.size();
        next.insert(next.end(), r, r + n);
        int *c = next.data() + base;
        c[inv[i] - 1] = i + 1;
        c[inv[i + 1] - 1] = i;

        ++visited;
        if (max_nodes != 0 && visited > max_nodes)
          throw BudgetExceeded("R(w) enumeration exceeded budget");
        if (!visit(std::span<const int>(c, n)))
          return visited;
      }
    }
    level.swap(next);
  }
  return visited;
}

std::vector<WeylElement> r_set(WeylElement const &w)
{
  std::vector<WeylElement> res;
  for_each_r(w, [&](std::span<const int> r) {
    res.push_back(WeylElement::finite(r).inverse());
    return true;
  });
  return res;
}

std::vector<WeylElement> lp_set(WeylElement const &w)
{
  WeylElement y_inv = decompose_xmy(w).y.inverse();
  std::vector<WeylElement> res;
  for (WeylElement const &r_inv : r_set(w))
    res.push_back(y_inv * r_inv);
  return res;
}

RefSet supp(WeylElement const &w)
{
  return RefSet::from_indices(w.rank(), reduced_word(w).letters);
}

int twisted_index(int n, int m, int i)
{
  return (((n - i + m) % n) + n) % n;
}

std::vector<RefSet> twisted_orbits(int n, int m)
{
  std::vector<RefSet> res;
  RefSet seen(n);
  for (int i = 0; i < n; ++i) {
    if (seen.contains(i))
      continue;
    RefSet orbit(n);
    int j = i;
    while (!orbit.contains(j)) {
      orbit.insert(j);
      j = twisted_index(n, m, j);
    }
    seen = seen | orbit;
    res.push_back(orbit);
  }
  return res;
}

namespace {

RefSet close_under(RefSet set, int n, int m)
{
  for (;;) {
    RefSet next = set;
    for (int i : set.indices())
      next.insert(twisted_index(n, m, i));
    if (next == set)
      return set;
    set = next;
  }
}

} // namespace

RefSet supp_sigma(WeylElement const &w)
{
  return close_under(supp(w), w.rank(), omega_component(w));
}

RefSet supp_sigma_finite(WeylElement const &u)
{
  if (!u.is_finite())
    throw NotFinite("supp_sigma_finite needs an element of W_0");
  int const n = u.rank();
  // s_i is in supp(u) iff u does not preserve {1, ..., i}.
  RefSet s(n);
  int running_max = 0;
  for (int i = 1; i < n; ++i) {
    running_max = std::max(running_max, u.window()[i - 1]);
    if (running_max > i)
      s.insert(i);
  }
  return close_under(s, n, 0);
}

std::optional<RefSet> twisted_image(WeylElement const &w, RefSet const &set)
{
  RefSet res(w.rank());
  for (int i : set.indices()) {
    int j = simple_index(twisted_conjugate(w, i));
    if (j < 0)
      return std::nullopt;
    res.insert(j);
  }
  return res;
}

RefSet s_w_sigma(WeylElement const &w)
{
  int const n = w.rank();
  std::vector<int> image(n, -1);
  for (int i = 1; i < n; ++i)
    image[i] = simple_index(twisted_conjugate(w, i));

  RefSet current = RefSet::finite(n);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 1; i < n; ++i) {
      if (!current.contains(i))
        continue;
      int j = image[i];
      if (j < 1 || !current.contains(j)) {
        current.erase(i);
        changed = true;
      }
    }
  }
  return current;
}

bool is_sigma_coxeter(WeylElement const &w)
{
  ReducedWord rw = reduced_word(w);
  int const n = w.rank();
  for (RefSet const &orbit : twisted_orbits(n, rw.omega)) {
    auto hits = std::count_if(rw.letters.begin(), rw.letters.end(),
                              [&](int s) { return orbit.contains(s); });
    if (hits > 1)
      return false;
  }
  return true;
}

} // namespace adlv
