#include "coinv/smirnov.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace coinv {

SegmentedWord::SegmentedWord(std::vector<int> letters, IndexSubset bars)
    : letters_(std::move(letters)), bars_(bars) {
  if (letters_.empty()) throw std::invalid_argument("segmented word must be nonempty");
  if (bars_.ambient() != length()) throw std::invalid_argument("bar set ambient size differs from word length");
  for (int i = 0; i < length(); ++i) {
    if (letters_[i] < 1) throw std::invalid_argument("letters must be positive");
    if (i > 0 && !bars_.contains(i) && letters_[i] == letters_[i - 1])
      throw std::invalid_argument("equal adjacent letters inside a block");
  }
}

SegmentedWord SegmentedWord::from_blocks(const std::vector<std::vector<int>>& blocks) {
  std::vector<int> letters;
  std::vector<int> cuts;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block");
    letters.insert(letters.end(), blocks[b].begin(), blocks[b].end());
    if (b + 1 < blocks.size()) cuts.push_back(static_cast<int>(letters.size()));
  }
  if (letters.empty()) throw std::invalid_argument("segmented word must be nonempty");
  const int n = static_cast<int>(letters.size());
  return SegmentedWord(std::move(letters), IndexSubset::from_elements(n, cuts));
}

std::vector<std::vector<int>> SegmentedWord::blocks() const {
  std::vector<std::vector<int>> out;
  for (int pos = 1; pos <= length(); ++pos) {
    if (is_initial(pos)) out.emplace_back();
    out.back().push_back(letter(pos));
  }
  return out;
}

int SegmentedWord::ascents() const {
  int count = 0;
  for (int pos = 2; pos <= length(); ++pos)
    if (!is_initial(pos) && letter(pos - 1) < letter(pos)) ++count;
  return count;
}

int SegmentedWord::descents() const {
  int count = 0;
  for (int pos = 2; pos <= length(); ++pos)
    if (!is_initial(pos) && letter(pos - 1) > letter(pos)) ++count;
  return count;
}

std::vector<int> SegmentedWord::content() const {
  const int top = *std::max_element(letters_.begin(), letters_.end());
  std::vector<int> out(top, 0);
  for (int a : letters_) ++out[a - 1];
  return out;
}

bool SegmentedWord::is_permutation() const {
  const auto c = content();
  return static_cast<int>(c.size()) == length() && std::all_of(c.begin(), c.end(), [](int m) { return m == 1; });
}

std::string SegmentedWord::to_string() const {
  std::string out;
  for (int pos = 1; pos <= length(); ++pos) {
    if (pos > 1) out += is_initial(pos) ? "|" : " ";
    out += std::to_string(letter(pos));
  }
  return out;
}

SegmentedWord SegmentedWord::parse(std::string_view text) {
  std::vector<std::vector<int>> blocks(1);
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == ' ') {
      ++pos;
    } else if (c == '|') {
      if (blocks.back().empty()) throw std::invalid_argument("empty block in '" + std::string(text) + "'");
      blocks.emplace_back();
      ++pos;
    } else {
      int v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
      if (ec != std::errc()) throw std::invalid_argument("malformed segmented word '" + std::string(text) + "'");
      blocks.back().push_back(v);
      pos = static_cast<std::size_t>(ptr - text.data());
    }
  }
  if (blocks.back().empty()) throw std::invalid_argument("empty block in '" + std::string(text) + "'");
  return from_blocks(blocks);
}

namespace {

void for_each_bar_mask(std::vector<int> word, bool smirnov_check,
                       const std::function<void(const SegmentedWord&)>& visit) {
  const int n = static_cast<int>(word.size());
  std::uint32_t forced = 0;
  if (smirnov_check)
    for (int i = 1; i < n; ++i)
      if (word[i - 1] == word[i]) forced |= 1U << (i - 1);
  const std::uint32_t limit = 1U << (n - 1);
  for (std::uint32_t m = 0; m < limit; ++m) {
    if ((m & forced) != forced) continue;
    visit(SegmentedWord(word, IndexSubset(n, m)));
  }
}

}  // namespace

void for_each_segmented_permutation(int n, const std::function<void(const SegmentedWord&)>& visit) {
  if (n < 1 || n > 12) throw std::invalid_argument("segmented permutations need 1 <= n <= 12");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for_each_bar_mask(perm, false, visit);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<SegmentedWord> enumerate_segmented_permutations(int n) {
  std::vector<SegmentedWord> out;
  for_each_segmented_permutation(n, [&](const SegmentedWord& w) { out.push_back(w); });
  return out;
}

std::vector<SegmentedWord> enumerate_segmented_permutations(int n, int k, int l) {
  std::vector<SegmentedWord> out;
  for_each_segmented_permutation(n, [&](const SegmentedWord& w) {
    if (w.ascents() == k && w.descents() == l) out.push_back(w);
  });
  return out;
}

std::vector<SegmentedWord> enumerate_smirnov_words(const std::vector<int>& content) {
  std::vector<int> word;
  for (std::size_t a = 0; a < content.size(); ++a) {
    if (content[a] < 0) throw std::invalid_argument("content entries must be nonnegative");
    word.insert(word.end(), content[a], static_cast<int>(a + 1));
  }
  if (word.empty() || word.size() > 12) throw std::invalid_argument("content size must be in [1, 12]");
  std::vector<SegmentedWord> out;
  do {
    for_each_bar_mask(word, true, [&](const SegmentedWord& w) { out.push_back(w); });
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

int sminv(const SegmentedWord& w) {
  const int n = w.length();
  int count = 0;
  for (int j = 2; j <= n; ++j) {
    const int wj = w.letter(j);
    const int prev = w.letter(j - 1);
    for (int i = 1; i < j; ++i) {
      const int wi = w.letter(i);
      if (wi <= wj) continue;
      const bool c1 = w.is_initial(j);
      const bool c2 = prev > wi;
      const bool c3 = i != j - 1 && prev == wi && w.is_initial(j - 1);
      const bool c4 = i != j - 1 && w.letter(j - 2) > prev && prev == wi;
      if (c1 || c2 || c3 || c4) ++count;
    }
  }
  return count;
}

bool is_thick(const SegmentedWord& w, int pos) { return w.is_initial(pos) || w.letter(pos - 1) > w.letter(pos); }

bool is_thin(const SegmentedWord& w, int pos) { return !w.is_initial(pos) && w.letter(pos - 1) < w.letter(pos); }

IndexSubset split_set(const SegmentedWord& sigma) {
  if (!sigma.is_permutation()) throw std::invalid_argument("split_set requires a segmented permutation");
  const int n = sigma.length();
  std::vector<int> where(n + 1);
  for (int pos = 1; pos <= n; ++pos) where[sigma.letter(pos)] = pos;
  std::uint32_t mask = 0;
  for (int m = 1; m < n; ++m) {
    const int i = where[m];
    const int j = where[m + 1];
    const bool splitting = (is_thick(sigma, i) && is_thin(sigma, j)) || (is_thin(sigma, i) && is_thin(sigma, j) && i < j) ||
                           (is_thick(sigma, i) && is_thick(sigma, j) && j < i);
    if (splitting) mask |= 1U << (m - 1);
  }
  return IndexSubset(n, mask);
}

QuvPolynomial sw_q_recursion(int n, int k, int l) {
  if (n < 0) throw std::invalid_argument("sw_q_recursion needs n >= 0");
  if (k < 0 || l < 0) return QuvPolynomial();
  // table[a][b] holds the value at the current length for (a, b).
  std::vector<std::vector<QuvPolynomial>> table(k + 1, std::vector<QuvPolynomial>(l + 1));
  table[0][0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::vector<std::vector<QuvPolynomial>> next(k + 1, std::vector<QuvPolynomial>(l + 1));
    for (int a = 0; a <= k; ++a) {
      for (int b = 0; b <= l; ++b) {
        if (a + b >= m) continue;
        QuvPolynomial s = table[a][b];
        if (b > 0) s += table[a][b - 1];
        if (a > 0) s += table[a - 1][b];
        if (a > 0 && b > 0) s += table[a - 1][b - 1];
        next[a][b] = q_integer(m - a - b) * s;
      }
    }
    table = std::move(next);
  }
  return table[k][l];
}

SegmentedWord psi(const BasisElement& b) {
  if (b.variant() != BasisVariant::A12) throw std::invalid_argument("psi is defined on the type-A (1,2) family");
  const int n = b.n();
  std::vector<std::vector<int>> blocks{{1}};
  for (int i = 2; i <= n; ++i) {
    const int a = b.alpha()[i - 1];
    const bool th = b.beta()[i - 1] != 0;
    const bool xi = b.gamma()[i - 1] != 0;
    const int size = static_cast<int>(blocks.size());
    if (!th && !xi) {
      const int idx = size - a;
      if (idx < 0 || idx > size) throw std::logic_error("psi: block position out of range");
      blocks.insert(blocks.begin() + idx, std::vector<int>{i});
    } else if (th && !xi) {
      const int idx = size - 1 - a;
      if (idx < 0) throw std::logic_error("psi: block position out of range");
      blocks[idx].push_back(i);
    } else if (!th && xi) {
      const int idx = size - 1 - a;
      if (idx < 0) throw std::logic_error("psi: block position out of range");
      blocks[idx].insert(blocks[idx].begin(), i);
    } else {
      const int idx = size - 2 - a;
      if (idx < 0) throw std::logic_error("psi: block position out of range");
      blocks[idx].push_back(i);
      blocks[idx].insert(blocks[idx].end(), blocks[idx + 1].begin(), blocks[idx + 1].end());
      blocks.erase(blocks.begin() + idx + 1);
    }
  }
  return SegmentedWord::from_blocks(blocks);
}

BasisElement psi_inverse(const SegmentedWord& sigma) {
  if (!sigma.is_permutation()) throw std::invalid_argument("psi_inverse requires a segmented permutation");
  const int n = sigma.length();
  std::vector<int> alpha(n, 0);
  std::vector<std::uint8_t> beta(n, 0), gamma(n, 0);
  auto blocks = sigma.blocks();
  for (int i = n; i >= 2; --i) {
    std::size_t idx = 0, at = 0;
    for (idx = 0; idx < blocks.size(); ++idx) {
      auto it = std::find(blocks[idx].begin(), blocks[idx].end(), i);
      if (it != blocks[idx].end()) {
        at = static_cast<std::size_t>(it - blocks[idx].begin());
        break;
      }
    }
    auto& block = blocks[idx];
    alpha[i - 1] = static_cast<int>(blocks.size() - idx) - 1;
    const bool first = at == 0;
    const bool last = at + 1 == block.size();
    if (first && last) {
      blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(idx));
    } else if (last) {
      beta[i - 1] = 1;
      block.pop_back();
    } else if (first) {
      gamma[i - 1] = 1;
      block.erase(block.begin());
    } else {
      beta[i - 1] = gamma[i - 1] = 1;
      std::vector<int> right(block.begin() + static_cast<std::ptrdiff_t>(at) + 1, block.end());
      block.resize(at);
      blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(idx) + 1, std::move(right));
    }
  }
  return BasisElement(BasisVariant::A12, std::move(alpha), std::move(beta), std::move(gamma));
}

}  // namespace coinv
