#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace coinv {

/// Weakly decreasing positive parts. The empty partition (n = 0) is valid.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// The hook (d+1, 1^{n-d-1}); requires 0 <= d < n.
  static Partition hook(int n, int d);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }

  /// "2,1"; the empty partition prints as "".
  std::string to_string() const;
  static Partition parse(std::string_view text);

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool is_partition() const;
  std::string to_string() const;

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/**
 * A subset of {1, ..., n-1} with its ambient n, stored as a bitmask with bit
 * (i-1) set for element i. Indexes fundamental quasisymmetric functions,
 * ascent sets and splitting sets.
 */
class IndexSubset {
 public:
  IndexSubset() = default;
  IndexSubset(int n, std::uint32_t mask);
  /// Throws std::invalid_argument for elements outside [1, n-1].
  static IndexSubset from_elements(int n, const std::vector<int>& elements);
  /// {from, ..., n-1}; empty when from >= n.
  static IndexSubset interval_to_end(int n, int from);

  int ambient() const { return n_; }
  std::uint32_t mask() const { return mask_; }
  bool contains(int i) const { return i >= 1 && i < n_ && ((mask_ >> (i - 1)) & 1U) != 0; }
  bool is_subset_of(const IndexSubset& other) const { return (mask_ & ~other.mask_) == 0; }
  int count() const;
  std::vector<int> elements() const;

  /// "{2,3}/n=5".
  std::string to_string() const;
  /// "{2,3}" without the ambient size.
  std::string to_brace_string() const;
  static IndexSubset parse(std::string_view text);

  auto operator<=>(const IndexSubset&) const = default;

 private:
  int n_ = 1;
  std::uint32_t mask_ = 0;
};

Composition comp_of_set(const IndexSubset& s);
IndexSubset set_of_comp(const Composition& alpha);

/// Partitions of n in reverse-lexicographic order: (3), (2,1), (1,1,1).
std::vector<Partition> enumerate_partitions(int n);
/// Subsets of {1,...,n-1} ordered by bitmask value.
std::vector<IndexSubset> enumerate_subsets(int n);
/// Compositions of n, in the order of enumerate_subsets via comp_of_set.
std::vector<Composition> enumerate_compositions(int n);

/// Largest n whose subsets fit the bitmask.
inline constexpr int kMaxAmbient = 31;

}  // namespace coinv
