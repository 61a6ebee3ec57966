#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "coinv/combinat.hpp"
#include "coinv/motzkin.hpp"
#include "coinv/qpoly.hpp"

namespace coinv {

/// Which monomial family an element belongs to: (bosonic, fermionic) sets in
/// type A or type B.
enum class BasisVariant { A12, A11, A02, B12, B11 };

PathVariant path_variant(BasisVariant v);
std::string to_string(BasisVariant v);
BasisVariant parse_basis_variant(std::string_view text);

/**
 * A monomial x^alpha theta_T xi_S, stored as exponent vectors. The sign of
 * the ordered fermionic product is not tracked; equality is on exponents.
 *
 * beta[i] and gamma[i] are the theta/xi occupancies at position i+1, so
 * (beta, gamma) also encodes the step of the associated Motzkin path.
 */
class BasisElement {
 public:
  /// Validates membership in the given family; throws std::invalid_argument.
  BasisElement(BasisVariant variant, std::vector<int> alpha, std::vector<std::uint8_t> beta,
               std::vector<std::uint8_t> gamma);

  BasisVariant variant() const { return variant_; }
  int n() const { return static_cast<int>(alpha_.size()); }
  const std::vector<int>& alpha() const { return alpha_; }
  const std::vector<std::uint8_t>& beta() const { return beta_; }
  const std::vector<std::uint8_t>& gamma() const { return gamma_; }

  int deg_x() const;
  int deg_theta() const;
  int deg_xi() const;

  PositionSet theta_set() const;
  PositionSet xi_set() const;
  MotzkinPath path() const;

  /// "x2*x3^2*th3*xi3": x-factors, then theta, then xi, each by ascending index; "1" if empty.
  std::string to_string() const;
  static BasisElement parse(std::string_view text, int n, BasisVariant variant);
  nlohmann::json to_json() const;

  friend bool operator==(const BasisElement&, const BasisElement&) = default;

 private:
  friend class BasisEnumerator;
  BasisElement() = default;

  BasisVariant variant_ = BasisVariant::A12;
  std::vector<int> alpha_;
  std::vector<std::uint8_t> beta_;
  std::vector<std::uint8_t> gamma_;
};

/// Per-position upper bounds on x-exponents.
struct StairBound {
  std::vector<int> values;
  friend bool operator==(const StairBound&, const StairBound&) = default;
};

/// alpha_1 = 0, alpha_i = alpha_{i-1} - 1 + [i not in T] + [i not in S].
/// Requires T, S within {2..n}; throws std::invalid_argument on a negative entry.
StairBound alpha_sequence(const PositionSet& theta, const PositionSet& xi);

/// beta_1 = -1 + [1 not in T] + [1 not in S],
/// beta_i = beta_{i-1} - 2 + [i not in T] + [i-1 not in T] + [i not in S] + [i-1 not in S].
/// Throws std::invalid_argument on a negative entry.
StairBound beta_sequence(const PositionSet& theta, const PositionSet& xi);

/// The bound sequence the given family uses for the fermionic support (T, S).
StairBound stair_bound(BasisVariant variant, const PositionSet& theta, const PositionSet& xi);

/// Product of [k+1]_q over the bound sequence of the path.
QuvPolynomial stair_q(const MotzkinPath& path);
QuvPolynomial stair_q(const StairBound& bound);

/// Visits every element of the family in canonical order (fermionic support
/// in path order, then alpha lexicographically). The reference is only valid
/// during the callback.
void for_each_basis_element(int n, BasisVariant variant, const std::function<void(const BasisElement&)>& visit);

struct FermionicSupport {
  PositionSet theta;
  PositionSet xi;
  StairBound bound;
};

/// Admissible (T, S) pairs with their bounds, in the canonical order.
std::vector<FermionicSupport> fermionic_supports(int n, BasisVariant variant);
/// Elements sharing one fermionic support, alpha in lexicographic order.
void for_each_element_with_support(BasisVariant variant, const FermionicSupport& support,
                                   const std::function<void(const BasisElement&)>& visit);

std::vector<BasisElement> enumerate_basis(int n, BasisVariant variant);
/// Streaming count (no materialization).
Integer count_basis(int n, BasisVariant variant);

/// Sum over fermionic supports of u^{|T|} v^{|S|} times the stair product.
QuvPolynomial hilbert_series(int n, BasisVariant variant);

/// Positions i in [1, n-1] that are ascents of b.
IndexSubset ascent_set(const BasisElement& b);

/// Number of type-A (1,2) elements whose path ends at height r+1 (i.e. the
/// final bound alpha_n equals r): n! * C(n-1, r).
Integer count_by_height(int n, int r);
/// Same quantity by the height recursion seeded at n = 1.
Integer count_by_height_recursive(int n, int r);

enum class StepClass { E, U, D };

/// Type-B (1,2) elements whose final staircase height beta_n equals r and
/// whose last step is of the given class, by recursion.
Integer count_type_b_refined(int n, int r, StepClass cls);
/// Closed forms for the refined counts (zero on the wrong parity).
Integer count_type_b_refined_closed(int n, int r, StepClass cls);
/// Sum of the refined recursion over r and classes.
Integer count_type_b(int n);

enum class WeylType { TypeA, TypeB };

/// Sum_k u^{n-k} [k]_q! Stir_q(n,k) (type A) or u^{n-k} [2k]_q!! Stir^B_q(n,k) (type B).
QuvPolynomial hilbert_11_formula(int n, WeylType type);

}  // namespace coinv
