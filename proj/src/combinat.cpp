#include "coinv/combinat.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace coinv {

namespace {

std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(sep, pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(pos, end - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::hook(int n, int d) {
  if (d < 0 || d >= n) throw std::invalid_argument("hook requires 0 <= d < n");
  std::vector<int> parts{d + 1};
  parts.insert(parts.end(), n - d - 1, 1);
  return Partition(std::move(parts));
}

std::string Partition::to_string() const { return join(parts_, ","); }

Partition Partition::parse(std::string_view text) {
  if (text.empty()) return Partition();
  return Partition(parse_int_list(text, ','));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Composition::is_partition() const { return std::is_sorted(parts_.rbegin(), parts_.rend()); }

std::string Composition::to_string() const { return "(" + join(parts_, ",") + ")"; }

IndexSubset::IndexSubset(int n, std::uint32_t mask) : n_(n), mask_(mask) {
  if (n < 1 || n > kMaxAmbient) throw std::invalid_argument("IndexSubset ambient n out of range");
  if (n <= 32 && (mask >> (n - 1)) != 0) throw std::invalid_argument("IndexSubset element outside [1, n-1]");
}

IndexSubset IndexSubset::from_elements(int n, const std::vector<int>& elements) {
  std::uint32_t mask = 0;
  for (int e : elements) {
    if (e < 1 || e >= n) throw std::invalid_argument("IndexSubset element outside [1, n-1]");
    mask |= 1U << (e - 1);
  }
  return IndexSubset(n, mask);
}

IndexSubset IndexSubset::interval_to_end(int n, int from) {
  std::uint32_t mask = 0;
  for (int i = std::max(from, 1); i < n; ++i) mask |= 1U << (i - 1);
  return IndexSubset(n, mask);
}

int IndexSubset::count() const { return std::popcount(mask_); }

std::vector<int> IndexSubset::elements() const {
  std::vector<int> out;
  for (int i = 1; i < n_; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string IndexSubset::to_brace_string() const { return "{" + join(elements(), ",") + "}"; }

std::string IndexSubset::to_string() const { return to_brace_string() + "/n=" + std::to_string(n_); }

IndexSubset IndexSubset::parse(std::string_view text) {
  const auto open = text.find('{');
  const auto close = text.find('}');
  const auto amb = text.find("/n=");
  if (open != 0 || close == std::string_view::npos || amb != close + 1)
    throw std::invalid_argument("malformed subset literal: '" + std::string(text) + "'");
  const auto inner = text.substr(1, close - 1);
  const auto ntext = text.substr(amb + 3);
  int n = 0;
  auto [ptr, ec] = std::from_chars(ntext.data(), ntext.data() + ntext.size(), n);
  if (ec != std::errc() || ptr != ntext.data() + ntext.size())
    throw std::invalid_argument("malformed subset ambient: '" + std::string(text) + "'");
  std::vector<int> elems = inner.empty() ? std::vector<int>{} : parse_int_list(inner, ',');
  if (!std::is_sorted(elems.begin(), elems.end()) || std::adjacent_find(elems.begin(), elems.end()) != elems.end())
    throw std::invalid_argument("subset elements must be strictly increasing");
  return from_elements(n, elems);
}

Composition comp_of_set(const IndexSubset& s) {
  std::vector<int> parts;
  int prev = 0;
  for (int e : s.elements()) {
    parts.push_back(e - prev);
    prev = e;
  }
  parts.push_back(s.ambient() - prev);
  return Composition(std::move(parts));
}

IndexSubset set_of_comp(const Composition& alpha) {
  std::vector<int> elems;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < alpha.parts().size(); ++i) {
    sum += alpha.parts()[i];
    elems.push_back(sum);
  }
  return IndexSubset::from_elements(alpha.size(), elems);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<IndexSubset> enumerate_subsets(int n) {
  if (n < 1 || n > kMaxAmbient) throw std::invalid_argument("enumerate_subsets: n out of range");
  std::vector<IndexSubset> out;
  const std::uint32_t limit = 1U << (n - 1);
  out.reserve(limit);
  for (std::uint32_t m = 0; m < limit; ++m) out.emplace_back(n, m);
  return out;
}

std::vector<Composition> enumerate_compositions(int n) {
  std::vector<Composition> out;
  for (const auto& s : enumerate_subsets(n)) out.push_back(comp_of_set(s));
  return out;
}

}  // namespace coinv
