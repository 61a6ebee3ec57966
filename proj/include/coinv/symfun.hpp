#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "coinv/basis.hpp"
#include "coinv/combinat.hpp"
#include "coinv/qpoly.hpp"

namespace coinv {

/// Coefficients on the fundamental quasisymmetric functions Q_{S,n}, keyed by S.
class QSymExpansion {
 public:
  explicit QSymExpansion(int n = 1) : n_(n) {}

  int n() const { return n_; }
  const std::map<IndexSubset, QuvPolynomial>& coeffs() const { return coeffs_; }
  /// Zero when the key is absent.
  QuvPolynomial coefficient(const IndexSubset& s) const;
  void add(const IndexSubset& s, const QuvPolynomial& c);
  void merge(const QSymExpansion& other);
  /// Sum of every coefficient (the pairing with h_1^n).
  QuvPolynomial total() const;

  nlohmann::json to_json() const;

  friend bool operator==(const QSymExpansion&, const QSymExpansion&) = default;

 private:
  int n_;
  std::map<IndexSubset, QuvPolynomial> coeffs_;
};

class SchurExpansion {
 public:
  explicit SchurExpansion(int n = 0) : n_(n) {}

  int n() const { return n_; }
  const std::map<Partition, QuvPolynomial>& coeffs() const { return coeffs_; }
  QuvPolynomial coefficient(const Partition& lambda) const;
  void add(const Partition& lambda, const QuvPolynomial& c);

  /// One line, partitions in ascending lexicographic order, e.g.
  /// "(q + u + v)s_{1 1} + s_{2}".
  std::string to_latex() const;
  /// [{"partition": [..], "coeff": <polynomial json>}, ...] in the same order.
  nlohmann::json to_json() const;

  friend bool operator==(const SchurExpansion&, const SchurExpansion&) = default;

 private:
  int n_;
  std::map<Partition, QuvPolynomial> coeffs_;
};

/// s_alpha for a composition is 0 or +-s_lambda.
struct SlinkyResult {
  int sign = 0;
  std::optional<Partition> shape;

  bool is_zero() const { return !shape.has_value(); }
  friend bool operator==(const SlinkyResult&, const SlinkyResult&) = default;
};

/// Straightens s_alpha with the row relation s_(..,a,b,..) = -s_(..,b-1,a+1,..).
SlinkyResult slinky(const Composition& alpha);

/// Sum over the family of u^deg_theta v^deg_xi q^deg_x Q_{Asc(b),n}.
/// Works for A12, A11 and A02. jobs = 0 uses every core.
QSymExpansion frobenius_qsym(int n, BasisVariant variant = BasisVariant::A12, int jobs = 1);
/// Restricted to deg_theta = k and deg_xi = l; coefficients are in q only.
QSymExpansion frobenius_qsym_refined(int n, int k, int l);
/// Sum over segmented permutations of u^asc v^desc q^sminv Q_{Split,n}.
QSymExpansion frobenius_qsym_via_words(int n);

/// Replaces each Q_{S,n} by s_{Comp(S)} and straightens.
SchurExpansion schur_expansion(const QSymExpansion& f);

/// Sum of q^deg_x over A12 elements with the given fermionic degrees and
/// Asc(b) contained in Set(mu).
QuvPolynomial h_mu_coefficient(int n, int k, int l, const Partition& mu);

/// Sum of q^deg_x over A12 elements with the given fermionic degrees whose
/// first d+1 positions carry no variable at all.
QuvPolynomial hook_h_coefficient(int n, int k, int l, int d);

/// Sum of q^deg_x over A12 elements with the given fermionic degrees and
/// Asc(b) = {d+1, ..., n-1}.
QuvPolynomial hook_schur_coefficient(int n, int k, int l, int d);

/// q^C(n-d-k-l, 2) [n-1-d, l]_q [n-1-k, d]_q [n-1-l, k]_q.
QuvPolynomial hook_qbinomial_formula(int n, int k, int l, int d);

/// q^C(n-k-l, 2) [n-1, k+l]_q [k+l, k]_q.
QuvPolynomial sign_character_formula(int n, int k, int l);

/// The two sides of q^C(m-k-l,2) [m-1, l] = sum_f q^(C(m-k-f,2)+C(l-f,2)) [m-1-k, f] [k, l-f]
/// with m = n - d.
QuvPolynomial vandermonde_lhs(int n, int k, int l, int d);
QuvPolynomial vandermonde_rhs(int n, int k, int l, int d);

/// True iff b satisfies the pivot characterization of Asc(b) = {d+1, ..., n-1}
/// for some pivot a in {d+1, ..., n}.
bool hook_asc_characterization(const BasisElement& b, int d);

}  // namespace coinv
