#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "coinv/combinat.hpp"
#include "coinv/qpoly.hpp"
#include "coinv/symfun.hpp"

// Brute-force reference computations used only by tests. None of them call
// into the library beyond its value types.
namespace coinv::testing {

inline QuvPolynomial q_pow(long long e) { return QuvPolynomial::q_power(static_cast<int>(e)); }

// Gaussian binomial as the sum over r-subsets of {1..m} of q^(sum - r(r+1)/2).
inline QuvPolynomial subset_qbinomial(int m, int r) {
  if (m < 0 || r < 0 || r > m) return {};
  QuvPolynomial out;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (std::popcount(mask) != r) continue;
    long long sum = 0;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1U) sum += i + 1;
    out += q_pow(sum - static_cast<long long>(r) * (r + 1) / 2);
  }
  return out;
}

inline long long half_pairs(long long a) { return a * (a - 1) / 2; }

inline QuvPolynomial q_int(int k) {
  QuvPolynomial out;
  for (int i = 0; i < k; ++i) out += q_pow(i);
  return out;
}

// Sum_k u^{n-k} [k]_q! S_q(n,k), type B with [2k]!! and [2k+1]. Type B keeps k = 0.
inline QuvPolynomial stirling_hilbert(int n, bool type_b) {
  std::vector<std::vector<QuvPolynomial>> st(n + 1, std::vector<QuvPolynomial>(n + 1));
  st[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 0; k <= m; ++k) {
      QuvPolynomial mult = type_b ? q_int(2 * k + 1) : q_int(k);
      st[m][k] = mult * st[m - 1][k];
      if (k > 0) st[m][k] += st[m - 1][k - 1];
    }
  QuvPolynomial out;
  for (int k = type_b ? 0 : 1; k <= n; ++k) {
    QuvPolynomial fact = 1;
    for (int i = 1; i <= k; ++i) fact *= type_b ? q_int(2 * i) : q_int(i);
    out += QuvPolynomial::u_power(n - k) * fact * st[n][k];
  }
  return out;
}

// A segmented permutation as plain data: letters and block-initial flags.
struct PlainSegmented {
  std::vector<int> w;
  std::vector<bool> initial;
};

inline void for_each_plain_segmented(int n, const std::function<void(const PlainSegmented&)>& visit) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (std::uint32_t bars = 0; bars < (1U << (n - 1)); ++bars) {
      PlainSegmented s{perm, std::vector<bool>(n, false)};
      s.initial[0] = true;
      for (int i = 1; i < n; ++i) s.initial[i] = ((bars >> (i - 1)) & 1U) != 0;
      visit(s);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

inline int plain_ascents(const PlainSegmented& s) {
  int c = 0;
  for (std::size_t i = 1; i < s.w.size(); ++i)
    if (!s.initial[i] && s.w[i - 1] < s.w[i]) ++c;
  return c;
}

inline int plain_descents(const PlainSegmented& s) {
  int c = 0;
  for (std::size_t i = 1; i < s.w.size(); ++i)
    if (!s.initial[i] && s.w[i - 1] > s.w[i]) ++c;
  return c;
}

// On permutations only the "initial" and "w_{j-1} > w_i" conditions can fire.
inline int plain_sminv(const PlainSegmented& s) {
  int c = 0;
  const int n = static_cast<int>(s.w.size());
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (s.w[i] > s.w[j] && (s.initial[j] || s.w[j - 1] > s.w[i])) ++c;
  return c;
}

// Number of weakly increasing words in letters 1..m with strict rises at the
// positions of `strict` and content exactly `content`.
inline long long count_fundamental_words(int n, const IndexSubset& strict, const std::vector<int>& content) {
  const int m = static_cast<int>(content.size());
  std::vector<int> word(n);
  long long hits = 0;
  std::function<void(int, int)> rec = [&](int pos, int low) {
    if (pos == n) {
      std::vector<int> seen(m, 0);
      for (int a : word) ++seen[a - 1];
      if (seen == content) ++hits;
      return;
    }
    for (int a = low; a <= m; ++a) {
      word[pos] = a;
      const int next_low = strict.contains(pos + 1) ? a + 1 : a;
      rec(pos + 1, next_low);
    }
  };
  rec(0, 1);
  return hits;
}

// [m_mu] of a quasisymmetric expansion, by expanding each fundamental into monomials.
inline QuvPolynomial brute_monomial_coefficient(const QSymExpansion& f, const Partition& mu) {
  QuvPolynomial out;
  for (const auto& [s, c] : f.coeffs()) {
    const long long hits = count_fundamental_words(f.n(), s, mu.parts());
    if (hits) out += QuvPolynomial(hits) * c;
  }
  return out;
}

}  // namespace coinv::testing
