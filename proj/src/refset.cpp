#include "adlv/refset.hpp"

#include <bit>

#include "adlv/errors.hpp"

namespace adlv {

namespace {

void check_index(int n, int i)
{
  if (i < 0 || i >= n)
    throw Error("simple reflection index " + std::to_string(i) +
                " out of range for n=" + std::to_string(n));
}

} // namespace

RefSet::RefSet(int n, std::uint64_t bits) : _n(n), _bits(bits)
{
  if (n < 0 || n > 64)
    throw Error("RefSet supports 0 <= n <= 64");
  if (n < 64)
    _bits &= (std::uint64_t{1} << n) - 1;
}

RefSet RefSet::of(int n, std::initializer_list<int> indices)
{
  RefSet res(n);
  for (int i : indices)
    res.insert(i);
  return res;
}

RefSet RefSet::from_indices(int n, const std::vector<int> &indices)
{
  RefSet res(n);
  for (int i : indices)
    res.insert(i);
  return res;
}

RefSet RefSet::affine(int n)
{
  return RefSet(n, ~std::uint64_t{0});
}

RefSet RefSet::finite(int n)
{
  RefSet res = affine(n);
  res.erase(0);
  return res;
}

bool RefSet::contains(int i) const
{
  return i >= 0 && i < _n && ((_bits >> i) & 1u);
}

void RefSet::insert(int i)
{
  check_index(_n, i);
  _bits |= std::uint64_t{1} << i;
}

void RefSet::erase(int i)
{
  check_index(_n, i);
  _bits &= ~(std::uint64_t{1} << i);
}

int RefSet::size() const
{
  return std::popcount(_bits);
}

std::vector<int> RefSet::indices() const
{
  std::vector<int> res;
  for (int i = 0; i < _n; ++i)
    if (contains(i))
      res.push_back(i);
  return res;
}

RefSet RefSet::shifted(int by) const
{
  RefSet res(_n);
  for (int i : indices())
    res.insert((((i + by) % _n) + _n) % _n);
  return res;
}

bool RefSet::is_subset_of(RefSet const &other) const
{
  return (_bits & ~other._bits) == 0;
}

RefSet RefSet::operator|(RefSet const &other) const
{
  return RefSet(_n, _bits | other._bits);
}

RefSet RefSet::operator&(RefSet const &other) const
{
  return RefSet(_n, _bits & other._bits);
}

RefSet RefSet::operator-(RefSet const &other) const
{
  return RefSet(_n, _bits & ~other._bits);
}

std::string RefSet::str() const
{
  std::string res = "{";
  bool first = true;
  for (int i : indices()) {
    if (!first)
      res += ",";
    res += "s" + std::to_string(i);
    first = false;
  }
  return res + "}";
}

} // namespace adlv
