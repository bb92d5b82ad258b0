#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adlv {

/// A subset of the simple affine reflections s_0, ..., s_{n-1} of affine
/// type A_{n-1}, stored as a bit mask (n <= 64).
class RefSet
{
public:
  RefSet() = default;
  explicit RefSet(int n, std::uint64_t bits = 0);

  static RefSet of(int n, std::initializer_list<int> indices);
  static RefSet from_indices(int n, const std::vector<int> &indices);

  /// All of S~ = {s_0, ..., s_{n-1}}.
  static RefSet affine(int n);
  /// The finite simple reflections S = {s_1, ..., s_{n-1}}.
  static RefSet finite(int n);

  int rank() const { return _n; }
  std::uint64_t bits() const { return _bits; }

  bool contains(int i) const;
  void insert(int i);
  void erase(int i);

  int size() const;
  bool empty() const { return _bits == 0; }

  std::vector<int> indices() const;

  // Indices move by `by` modulo n; this is conjugation by tau_1^by.
  RefSet shifted(int by) const;

  bool is_subset_of(RefSet const &other) const;

  RefSet operator|(RefSet const &other) const;
  RefSet operator&(RefSet const &other) const;
  RefSet operator-(RefSet const &other) const;

  bool operator==(RefSet const &other) const = default;

  /// "{s0,s3,s4}"
  std::string str() const;

private:
  int _n = 0;
  std::uint64_t _bits = 0;
};

} // namespace adlv
