#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace coinv {

enum class Step : std::uint8_t { Up, HorizTheta, HorizXi, Down };

/// TypeA paths start with a forced up-step and stay at height >= 1 afterwards;
/// TypeB paths stay at height >= 0.
enum class PathVariant { TypeA, TypeB };

/// A set of positions drawn from {1, ..., n} (bit i-1 for position i).
struct PositionSet {
  int n = 0;
  std::uint32_t mask = 0;

  static PositionSet from_elements(int n, const std::vector<int>& elements);

  bool contains(int i) const { return i >= 1 && i <= n && ((mask >> (i - 1)) & 1U) != 0; }
  int count() const;
  std::vector<int> elements() const;
  std::string to_string() const;

  auto operator<=>(const PositionSet&) const = default;
};

class MotzkinPath {
 public:
  /// Throws std::invalid_argument if the height floor of the variant is violated.
  MotzkinPath(std::vector<Step> steps, PathVariant variant);

  const std::vector<Step>& steps() const { return steps_; }
  PathVariant variant() const { return variant_; }
  int length() const { return static_cast<int>(steps_.size()); }

  /// Prefix height after i steps; height_after(0) == 0.
  int height_after(int i) const;
  int final_height() const { return height_after(length()); }

  /// Positions carrying a theta (HorizTheta or Down).
  PositionSet theta_set() const;
  /// Positions carrying a xi (HorizXi or Down).
  PositionSet xi_set() const;

  /// "U T X D" literal.
  std::string to_string() const;
  static MotzkinPath parse(std::string_view text, PathVariant variant);

  /// Rebuilds the path whose step at position i is encoded by (i in T, i in S).
  static MotzkinPath from_sets(const PositionSet& theta, const PositionSet& xi, PathVariant variant);

  auto operator<=>(const MotzkinPath&) const = default;

 private:
  std::vector<Step> steps_;
  PathVariant variant_;
};

bool is_valid_path(const std::vector<Step>& steps, PathVariant variant);
int step_delta(Step s);
char step_letter(Step s);

/// Visits every path of length n in canonical order (Up < HorizTheta <
/// HorizXi < Down, lexicographic) without materializing the list.
void for_each_path(int n, PathVariant variant, const std::function<void(const MotzkinPath&)>& visit);

/// All paths of length n. TypeA rejects n = 0; TypeB n = 0 yields the empty path.
std::vector<MotzkinPath> enumerate_paths(int n, PathVariant variant);

}  // namespace coinv
