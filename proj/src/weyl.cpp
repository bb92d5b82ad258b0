#include "adlv/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "adlv/errors.hpp"

namespace adlv {

namespace {

constexpr long long window_bound = 1LL << 30;

long long floor_div(long long a, long long b)
{
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

long long ceil_div(long long a, long long b)
{
  return -floor_div(-a, b);
}

void check_rank(WeylElement const &a, WeylElement const &b)
{
  if (a.rank() != b.rank())
    throw RankMismatch(a.rank(), b.rank());
}

} // namespace

bool Cocharacter::is_dominant() const
{
  return std::is_sorted(coords.begin(), coords.end(), std::greater<>());
}

long Cocharacter::pairing_2rho() const
{
  long res = 0;
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (std::size_t j = i + 1; j < coords.size(); ++j)
      res += coords[i] - coords[j];
  return res;
}

WeylElement WeylElement::identity(int n, int similitude)
{
  if (n < 1)
    throw InvalidElement("rank must be positive");
  std::vector<int> window(n);
  std::iota(window.begin(), window.end(), 1);
  return WeylElement(std::move(window), similitude);
}

WeylElement WeylElement::from_window(std::vector<int> window, int similitude)
{
  int const n = static_cast<int>(window.size());
  if (n < 1)
    throw InvalidElement("empty window");

  std::vector<bool> seen(n, false);
  for (int v : window) {
    if (v <= -window_bound || v >= window_bound)
      throw InvalidElement("window entry out of range");
    auto r = static_cast<int>(((v - 1) % n + n) % n);
    if (seen[r])
      throw InvalidElement("window entries are not distinct modulo n");
    seen[r] = true;
  }
  return WeylElement(std::move(window), similitude);
}

WeylElement WeylElement::simple(int n, int i)
{
  if (i < 0 || i >= n)
    throw InvalidElement("simple reflection index out of range");
  if (n < 2)
    throw InvalidElement("simple reflections need n >= 2");

  WeylElement res = identity(n);
  if (i == 0) {
    res._window[0] = 0;
    res._window[n - 1] = n + 1;
  } else {
    std::swap(res._window[i - 1], res._window[i]);
  }
  return res;
}

WeylElement WeylElement::from_word(int n, std::span<const int> word)
{
  WeylElement res = identity(n);
  for (int i : word)
    res = res * simple(n, i);
  return res;
}

WeylElement WeylElement::finite(std::span<const int> perm)
{
  std::vector<int> window(perm.begin(), perm.end());
  int const n = static_cast<int>(window.size());
  for (int v : window)
    if (v < 1 || v > n)
      throw InvalidElement("finite permutation entries must lie in 1..n");
  return from_window(std::move(window));
}

long long WeylElement::operator()(long long j) const
{
  long long const n = rank();
  long long q = floor_div(j - 1, n);
  long long r = j - q * n;
  return _window[r - 1] + q * n;
}

bool WeylElement::is_identity() const
{
  for (int i = 0; i < rank(); ++i)
    if (_window[i] != i + 1)
      return false;
  return _similitude == 0;
}

bool WeylElement::is_finite() const
{
  return std::all_of(_window.begin(), _window.end(),
                     [n = rank()](int v) { return v >= 1 && v <= n; });
}

WeylElement WeylElement::inverse() const
{
  int const n = rank();
  std::vector<int> res(n);
  for (int i = 1; i <= n; ++i) {
    long long v = _window[i - 1];
    long long q = floor_div(v - 1, n);
    long long r = v - q * n;
    res[r - 1] = static_cast<int>(i - q * n);
  }
  return WeylElement(std::move(res), -_similitude);
}

std::string WeylElement::str() const
{
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rank(); ++i)
    os << (i ? "," : "") << _window[i];
  os << "];sim=" << _similitude;
  return os.str();
}

WeylElement operator*(WeylElement const &a, WeylElement const &b)
{
  check_rank(a, b);
  std::vector<int> window(a.rank());
  for (int i = 0; i < a.rank(); ++i) {
    long long v = a(b._window[i]);
    if (v <= -window_bound || v >= window_bound)
      throw InvalidElement("window entry overflow in product");
    window[i] = static_cast<int>(v);
  }
  return WeylElement(std::move(window), a._similitude + b._similitude);
}

std::ostream &operator<<(std::ostream &os, WeylElement const &w)
{
  return os << w.str();
}

WeylElement translation(Cocharacter const &lambda)
{
  int const n = lambda.rank();
  std::vector<int> window(n);
  for (int i = 0; i < n; ++i)
    window[i] = i + 1 + n * lambda.coords[i];
  return WeylElement::from_window(std::move(window), lambda.similitude);
}

WeylElement tau1(int n)
{
  Cocharacter e1{std::vector<int>(n, 0), 0};
  e1.coords[0] = 1;
  Word word(n - 1);
  std::iota(word.begin(), word.end(), 1);
  return translation(e1) * WeylElement::from_word(n, word);
}

WeylElement power(WeylElement const &w, int m)
{
  WeylElement base = m >= 0 ? w : w.inverse();
  WeylElement res = WeylElement::identity(w.rank());
  for (int k = 0; k < std::abs(m); ++k)
    res = res * base;
  return res;
}

int length(WeylElement const &w)
{
  // For each pair of residue classes, count the shifts j = r + q n with
  // j > i and f(j) < f(i).
  long long const n = w.rank();
  auto f = w.window();
  long long total = 0;
  for (long long i = 1; i <= n; ++i) {
    for (long long r = 1; r <= n; ++r) {
      long long lo = floor_div(i - r, n) + 1;
      long long hi = ceil_div(static_cast<long long>(f[i - 1]) - f[r - 1], n) - 1;
      if (hi >= lo)
        total += hi - lo + 1;
    }
  }
  return static_cast<int>(total);
}

WeylElement sigma(WeylElement const &w)
{
  int const n = w.rank();
  std::vector<int> window(n);
  auto f = w.window();
  for (int i = 1; i <= n; ++i)
    window[i - 1] = n + 1 - f[n - i];
  return WeylElement::from_window(std::move(window), w.similitude());
}

int omega_component(WeylElement const &w)
{
  long long sum = 0;
  auto f = w.window();
  for (int i = 0; i < w.rank(); ++i)
    sum += f[i] - (i + 1);
  return static_cast<int>(sum / w.rank());
}

AffinePart affine_part(WeylElement const &w)
{
  int const m = omega_component(w);
  WeylElement stripped = w * WeylElement::identity(w.rank(), -w.similitude());
  return {stripped * power(tau1(w.rank()), -m), m, w.similitude()};
}

bool is_left_descent(WeylElement const &w, int i)
{
  // l(s_i w) < l(w) iff w^{-1}(i) > w^{-1}(i+1).
  WeylElement inv = w.inverse();
  return inv(i) > inv(i + 1);
}

RefSet left_descents(WeylElement const &w)
{
  WeylElement inv = w.inverse();
  RefSet res(w.rank());
  for (int i = 0; i < w.rank(); ++i)
    if (inv(i) > inv(i + 1))
      res.insert(i);
  return res;
}

ReducedWord reduced_word(WeylElement const &w)
{
  int const n = w.rank();
  AffinePart part = affine_part(w);
  WeylElement v = part.element;
  ReducedWord res{{}, part.omega};
  while (!v.is_identity()) {
    RefSet desc = left_descents(v);
    int s = desc.indices().front();
    res.letters.push_back(s);
    v = WeylElement::simple(n, s) * v;
  }
  return res;
}

bool bruhat_leq(WeylElement const &u, WeylElement const &w)
{
  check_rank(u, w);
  if (u.similitude() != w.similitude() ||
      omega_component(u) != omega_component(w))
    return false;

  int const n = w.rank();
  WeylElement a = u;
  WeylElement b = w;
  int la = length(a);
  int lb = length(b);
  while (true) {
    if (la > lb)
      return false;
    if (lb == 0)
      return a == b;
    int s = left_descents(b).indices().front();
    WeylElement sn = WeylElement::simple(n, s);
    b = sn * b;
    --lb;
    if (is_left_descent(a, s)) {
      a = sn * a;
      --la;
    }
  }
}

bool is_min_coset_rep(WeylElement const &w)
{
  WeylElement inv = w.inverse();
  for (int i = 1; i < w.rank(); ++i)
    if (inv(i) > inv(i + 1))
      return false;
  return true;
}

WeylElement finite_part(WeylElement const &w)
{
  int const n = w.rank();
  std::vector<int> window(n);
  for (int i = 0; i < n; ++i)
    window[i] = static_cast<int>(((w.window()[i] - 1) % n + n) % n) + 1;
  return WeylElement::finite(window);
}

XmyDecomposition decompose_xmy(WeylElement const &w)
{
  // w = u phi^lambda with u(i) the residue and lambda_i the quotient of f(i).
  // Sorting lambda stably into dominant order gives z with z lambda = mu;
  // the stable tie-break makes z minimal in W_mu z, which is the condition
  // <alpha, mu> >= delta^+(-z^{-1} alpha) for all positive alpha.
  int const n = w.rank();
  WeylElement u = finite_part(w);
  std::vector<int> lambda(n);
  for (int i = 0; i < n; ++i)
    lambda[i] = static_cast<int>(floor_div(w.window()[i] - 1, n));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return lambda[a] > lambda[b]; });

  std::vector<int> z_inv(n);
  Cocharacter mu{std::vector<int>(n), w.similitude()};
  for (int j = 0; j < n; ++j) {
    z_inv[j] = order[j] + 1;
    mu.coords[j] = lambda[order[j]];
  }
  WeylElement zi = WeylElement::finite(z_inv);
  return {u * zi, std::move(mu), zi.inverse()};
}

int simple_index(WeylElement const &w)
{
  if (w.similitude() != 0)
    return -1;
  int const n = w.rank();
  auto f = w.window();
  std::vector<int> moved;
  for (int p = 0; p < n; ++p) {
    if (f[p] != p + 1) {
      moved.push_back(p);
      if (moved.size() > 2)
        return -1;
    }
  }
  if (moved.size() != 2)
    return -1;
  int a = moved[0], b = moved[1];
  if (b == a + 1 && f[a] == a + 2 && f[b] == a + 1)
    return a + 1;
  if (a == 0 && b == n - 1 && f[a] == 0 && f[b] == n + 1)
    return 0;
  return -1;
}

WeylElement twisted_conjugate(WeylElement const &w, int i)
{
  return w * sigma(WeylElement::simple(w.rank(), i)) * w.inverse();
}

} // namespace adlv

std::size_t std::hash<adlv::WeylElement>::operator()(
  adlv::WeylElement const &w) const noexcept
{
  std::size_t h = std::hash<int>()(w.similitude());
  for (int v : w.window())
    h ^= std::hash<int>()(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}
