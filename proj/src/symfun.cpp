#include "coinv/symfun.hpp"

#include <algorithm>
#include <stdexcept>

#include "coinv/parallel.hpp"
#include "coinv/smirnov.hpp"

namespace coinv {

QuvPolynomial QSymExpansion::coefficient(const IndexSubset& s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? QuvPolynomial() : it->second;
}

void QSymExpansion::add(const IndexSubset& s, const QuvPolynomial& c) {
  if (s.ambient() != n_) throw std::invalid_argument("subset ambient size differs from expansion degree");
  auto& slot = coeffs_[s];
  slot += c;
  if (slot.is_zero()) coeffs_.erase(s);
}

void QSymExpansion::merge(const QSymExpansion& other) {
  for (const auto& [s, c] : other.coeffs_) add(s, c);
}

QuvPolynomial QSymExpansion::total() const {
  QuvPolynomial out;
  for (const auto& [s, c] : coeffs_) out += c;
  return out;
}

nlohmann::json QSymExpansion::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [s, c] : coeffs_) out.push_back({{"subset", s.elements()}, {"coeff", c.to_json()}});
  return out;
}

QuvPolynomial SchurExpansion::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? QuvPolynomial() : it->second;
}

void SchurExpansion::add(const Partition& lambda, const QuvPolynomial& c) {
  if (lambda.size() != n_) throw std::invalid_argument("partition size differs from expansion degree");
  auto& slot = coeffs_[lambda];
  slot += c;
  if (slot.is_zero()) coeffs_.erase(lambda);
}

namespace {

std::string schur_symbol(const Partition& lambda) {
  std::string out = "s_{";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(lambda.parts()[i]);
  }
  return out + "}";
}

}  // namespace

std::string SchurExpansion::to_latex() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [lambda, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    if (c == QuvPolynomial(1))
      out += schur_symbol(lambda);
    else
      out += "(" + c.to_grouped_string() + ")" + schur_symbol(lambda);
  }
  return out;
}

nlohmann::json SchurExpansion::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [lambda, c] : coeffs_) out.push_back({{"partition", lambda.parts()}, {"coeff", c.to_json()}});
  return out;
}

SlinkyResult slinky(const Composition& alpha) {
  const int len = alpha.length();
  if (len == 0) throw std::invalid_argument("slinky needs a nonempty composition");
  std::vector<int> shifted(len);
  for (int i = 0; i < len; ++i) shifted[i] = alpha.parts()[i] + (len - 1 - i);
  int inversions = 0;
  for (int i = 0; i < len; ++i)
    for (int j = i + 1; j < len; ++j) {
      if (shifted[i] == shifted[j]) return {};
      if (shifted[i] < shifted[j]) ++inversions;
    }
  std::sort(shifted.begin(), shifted.end(), std::greater<>());
  std::vector<int> parts(len);
  for (int i = 0; i < len; ++i) parts[i] = shifted[i] - (len - 1 - i);
  return {inversions % 2 == 0 ? 1 : -1, Partition(std::move(parts))};
}

QSymExpansion frobenius_qsym(int n, BasisVariant variant, int jobs) {
  if (n < 1) throw std::invalid_argument("frobenius_qsym needs n >= 1");
  if (path_variant(variant) != PathVariant::TypeA) throw std::invalid_argument("frobenius_qsym is defined for type A");
  const auto supports = fermionic_supports(n, variant);
  auto parts = parallel_map<QSymExpansion>(supports.size(), jobs, [&](std::size_t i) {
    QSymExpansion local(n);
    for_each_element_with_support(variant, supports[i], [&](const BasisElement& b) {
      local.add(ascent_set(b), QuvPolynomial::monomial({b.deg_x(), b.deg_theta(), b.deg_xi()}));
    });
    return local;
  });
  QSymExpansion out(n);
  for (const auto& p : parts) out.merge(p);
  return out;
}

QSymExpansion frobenius_qsym_refined(int n, int k, int l) {
  if (n < 1) throw std::invalid_argument("frobenius_qsym needs n >= 1");
  QSymExpansion out(n);
  for (const auto& support : fermionic_supports(n, BasisVariant::A12)) {
    if (support.theta.count() != k || support.xi.count() != l) continue;
    for_each_element_with_support(BasisVariant::A12, support, [&](const BasisElement& b) {
      out.add(ascent_set(b), QuvPolynomial::q_power(b.deg_x()));
    });
  }
  return out;
}

QSymExpansion frobenius_qsym_via_words(int n) {
  QSymExpansion out(n);
  for_each_segmented_permutation(n, [&](const SegmentedWord& w) {
    out.add(split_set(w), QuvPolynomial::monomial({sminv(w), w.ascents(), w.descents()}));
  });
  return out;
}

SchurExpansion schur_expansion(const QSymExpansion& f) {
  SchurExpansion out(f.n());
  for (const auto& [s, c] : f.coeffs()) {
    const SlinkyResult r = slinky(comp_of_set(s));
    if (r.is_zero()) continue;
    out.add(*r.shape, r.sign > 0 ? c : -c);
  }
  return out;
}

namespace {

template <typename Pred>
QuvPolynomial sum_over_degree(int n, int k, int l, Pred&& keep) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  QuvPolynomial out;
  if (k < 0 || l < 0) return out;
  for (const auto& support : fermionic_supports(n, BasisVariant::A12)) {
    if (support.theta.count() != k || support.xi.count() != l) continue;
    for_each_element_with_support(BasisVariant::A12, support, [&](const BasisElement& b) {
      if (keep(b)) out += QuvPolynomial::q_power(b.deg_x());
    });
  }
  return out;
}

void check_hook_args(int n, int d) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (d < 0 || d > n - 1) throw std::invalid_argument("hook index d must satisfy 0 <= d <= n-1");
}

}  // namespace

QuvPolynomial h_mu_coefficient(int n, int k, int l, const Partition& mu) {
  if (mu.size() != n) throw std::invalid_argument("mu must be a partition of n");
  const IndexSubset allowed = set_of_comp(Composition(mu.parts()));
  return sum_over_degree(n, k, l, [&](const BasisElement& b) { return ascent_set(b).is_subset_of(allowed); });
}

QuvPolynomial hook_h_coefficient(int n, int k, int l, int d) {
  check_hook_args(n, d);
  return sum_over_degree(n, k, l, [&](const BasisElement& b) {
    for (int m = 0; m <= d; ++m)
      if (b.alpha()[m] || b.beta()[m] || b.gamma()[m]) return false;
    return true;
  });
}

QuvPolynomial hook_schur_coefficient(int n, int k, int l, int d) {
  check_hook_args(n, d);
  const IndexSubset target = IndexSubset::interval_to_end(n, d + 1);
  return sum_over_degree(n, k, l, [&](const BasisElement& b) { return ascent_set(b) == target; });
}

QuvPolynomial hook_qbinomial_formula(int n, int k, int l, int d) {
  check_hook_args(n, d);
  if (k < 0 || l < 0 || k + l >= n) throw std::invalid_argument("hook formula needs k, l >= 0 and k + l < n");
  const int power = static_cast<int>(choose_two(n - d - k - l));
  return QuvPolynomial::q_power(power) * q_binomial(n - 1 - d, l) * q_binomial(n - 1 - k, d) *
         q_binomial(n - 1 - l, k);
}

QuvPolynomial sign_character_formula(int n, int k, int l) {
  if (n < 1 || k < 0 || l < 0 || k + l >= n) throw std::invalid_argument("sign character formula needs k + l < n");
  const int power = static_cast<int>(choose_two(n - k - l));
  return QuvPolynomial::q_power(power) * q_binomial(n - 1, k + l) * q_binomial(k + l, k);
}

namespace {

int vandermonde_size(int n, int k, int l, int d) {
  const int m = n - d;
  if (n < 1 || d < 0 || m < 1 || k < 0 || l < 0 || k >= m || l >= m)
    throw std::invalid_argument("identity needs n >= 1, 0 <= k, l < n - d");
  return m;
}

}  // namespace

QuvPolynomial vandermonde_lhs(int n, int k, int l, int d) {
  const int m = vandermonde_size(n, k, l, d);
  return QuvPolynomial::q_power(static_cast<int>(choose_two(m - k - l))) * q_binomial(m - 1, l);
}

QuvPolynomial vandermonde_rhs(int n, int k, int l, int d) {
  const int m = vandermonde_size(n, k, l, d);
  QuvPolynomial out;
  for (int f = 0; f <= l; ++f) {
    const QuvPolynomial term = q_binomial(m - 1 - k, f) * q_binomial(k, l - f);
    if (term.is_zero()) continue;
    const int power = static_cast<int>(choose_two(m - k - f) + choose_two(l - f));
    out += QuvPolynomial::q_power(power) * term;
  }
  return out;
}

bool hook_asc_characterization(const BasisElement& b, int d) {
  if (b.variant() != BasisVariant::A12) throw std::invalid_argument("characterization is stated for A12 elements");
  const int n = b.n();
  check_hook_args(n, d);
  auto al = [&](int m) { return b.alpha()[m - 1]; };
  auto be = [&](int m) { return static_cast<int>(b.beta()[m - 1]); };
  auto ga = [&](int m) { return static_cast<int>(b.gamma()[m - 1]); };
  for (int m = 1; m <= d + 1; ++m)
    if (al(m) || be(m) || ga(m)) return false;
  for (int a = d + 1; a <= n; ++a) {
    bool ok = true;
    for (int m = d + 2; m <= a && ok; ++m) ok = be(m) == 0 && al(m - 1) < al(m) + ga(m);
    if (ok && a < n) ok = be(a) == 0 && be(a + 1) == 1;
    for (int m = a + 2; m <= n && ok; ++m) ok = be(m) == 1 && al(m - 1) >= al(m) + ga(m);
    if (ok) return true;
  }
  return false;
}

}  // namespace coinv
