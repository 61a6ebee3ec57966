#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "coinv/basis.hpp"
#include "coinv/combinat.hpp"
#include "coinv/qpoly.hpp"

namespace coinv {

/**
 * A word of positive letters cut into blocks. Bit i-1 of `bars` marks a bar
 * between positions i and i+1. Adjacent letters inside a block must differ.
 * Positions are 1-based in every accessor taking a position.
 */
class SegmentedWord {
 public:
  /// Throws std::invalid_argument on an empty word, a non-positive letter,
  /// a bar set of the wrong ambient size, or equal neighbours in a block.
  SegmentedWord(std::vector<int> letters, IndexSubset bars);
  static SegmentedWord from_blocks(const std::vector<std::vector<int>>& blocks);

  const std::vector<int>& letters() const { return letters_; }
  const IndexSubset& bars() const { return bars_; }
  int length() const { return static_cast<int>(letters_.size()); }
  int letter(int pos) const { return letters_[pos - 1]; }

  std::vector<std::vector<int>> blocks() const;
  int block_count() const { return bars_.count() + 1; }
  bool is_initial(int pos) const { return pos == 1 || bars_.contains(pos - 1); }

  /// Within-block rises and falls.
  int ascents() const;
  int descents() const;

  /// content()[a-1] is the multiplicity of letter a.
  std::vector<int> content() const;
  bool is_permutation() const;

  /// "2|1 3": spaces between letters of a block, bars between blocks.
  std::string to_string() const;
  static SegmentedWord parse(std::string_view text);

  auto operator<=>(const SegmentedWord&) const = default;

 private:
  std::vector<int> letters_;
  IndexSubset bars_;
};

/// Segmented permutations of [n] ordered by permutation (lex), then bar mask.
void for_each_segmented_permutation(int n, const std::function<void(const SegmentedWord&)>& visit);
std::vector<SegmentedWord> enumerate_segmented_permutations(int n);
/// Only those with k ascents and l descents.
std::vector<SegmentedWord> enumerate_segmented_permutations(int n, int k, int l);

/// Segmented Smirnov words with the given content (content[a-1] copies of a;
/// zero entries allowed), ordered by word (lex), then bar mask.
std::vector<SegmentedWord> enumerate_smirnov_words(const std::vector<int>& content);

/// Number of pairs i < j with w_i > w_j such that one of:
/// (1) j is initial; (2) w_{j-1} > w_i; (3) i != j-1, w_{j-1} = w_i and j-1
/// is initial; (4) i != j-1 and w_{j-2} > w_{j-1} = w_i.
int sminv(const SegmentedWord& w);

/// Initial, or the end of a descent.
bool is_thick(const SegmentedWord& w, int pos);
/// Not initial, and the end of an ascent.
bool is_thin(const SegmentedWord& w, int pos);

/// Values m in [1, n-1] that are splitting. Requires a segmented permutation.
IndexSubset split_set(const SegmentedWord& sigma);

/// Sum of q^sminv over segmented permutations of [n] with k ascents and l
/// descents, computed by recursion on n.
QuvPolynomial sw_q_recursion(int n, int k, int l);

/// Insertion map from type-A (1,2) elements to segmented permutations.
SegmentedWord psi(const BasisElement& b);
/// Inverse of psi; throws std::invalid_argument unless sigma is a segmented permutation.
BasisElement psi_inverse(const SegmentedWord& sigma);

}  // namespace coinv
