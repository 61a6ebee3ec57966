#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

namespace coinv {

using Integer = boost::multiprecision::cpp_int;

/// Exponents of q (x-degree), u (theta-degree) and v (xi-degree).
struct Exponent {
  int q = 0;
  int u = 0;
  int v = 0;

  auto operator<=>(const Exponent&) const = default;
};

/**
 * Sparse polynomial in three commuting variables q, u, v with arbitrary
 * precision integer coefficients. Zero coefficients are never stored, so
 * structural equality is polynomial equality.
 */
class QuvPolynomial {
 public:
  using TermMap = std::map<Exponent, Integer>;

  QuvPolynomial() = default;
  QuvPolynomial(long long constant);  // NOLINT: implicit from integer literals
  explicit QuvPolynomial(const Integer& constant);

  static QuvPolynomial monomial(Exponent e, const Integer& coeff = 1);
  static QuvPolynomial q_power(int a) { return monomial({a, 0, 0}); }
  static QuvPolynomial u_power(int b) { return monomial({0, b, 0}); }
  static QuvPolynomial v_power(int c) { return monomial({0, 0, c}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Integer coefficient(Exponent e) const;
  void add_term(Exponent e, const Integer& coeff);

  /// Highest q-exponent present, or -1 for the zero polynomial.
  int max_q_degree() const;

  Integer evaluate(const Integer& q, const Integer& u, const Integer& v) const;
  Integer sum_of_coefficients() const { return evaluate(1, 1, 1); }

  /// Coefficient of u^b v^c, as a polynomial in q alone.
  QuvPolynomial uv_coefficient(int b, int c) const;
  QuvPolynomial with_q_zero() const;
  QuvPolynomial with_u_zero() const;
  QuvPolynomial with_v_zero() const;

  QuvPolynomial& operator+=(const QuvPolynomial& rhs);
  QuvPolynomial& operator-=(const QuvPolynomial& rhs);
  QuvPolynomial& operator*=(const QuvPolynomial& rhs);

  friend QuvPolynomial operator+(QuvPolynomial lhs, const QuvPolynomial& rhs) { return lhs += rhs; }
  friend QuvPolynomial operator-(QuvPolynomial lhs, const QuvPolynomial& rhs) { return lhs -= rhs; }
  friend QuvPolynomial operator*(const QuvPolynomial& lhs, const QuvPolynomial& rhs);
  QuvPolynomial operator-() const;

  friend bool operator==(const QuvPolynomial&, const QuvPolynomial&) = default;

  /// Flat human-readable form, terms in descending lexicographic (q,u,v)
  /// order: "q^2 + 3q + 2", "q + u + v + 1".
  std::string to_string() const;

  /// Grouped by u^b v^c with q-polynomial coefficients, e.g.
  /// "(q^2 + 3q + 2)u + (q + 3)uv". Groups ordered by total (u,v)-degree,
  /// then descending u-degree.
  std::string to_grouped_string() const;

  /// JSON array of {"q","u","v","coeff"} records in ascending (q,u,v) order.
  nlohmann::json to_json() const;
  static QuvPolynomial from_json(const nlohmann::json& j);

 private:
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const QuvPolynomial& p);

// q-analog building blocks. All results are polynomials in q only.

/// [k]_q = 1 + q + ... + q^{k-1}; zero for k <= 0.
QuvPolynomial q_integer(int k);
/// [1]_q [2]_q ... [k]_q.
QuvPolynomial q_factorial(int k);
/// [2]_q [4]_q ... [2k]_q.
QuvPolynomial q_double_factorial_even(int k);
/// Gaussian binomial; zero outside 0 <= r <= m.
QuvPolynomial q_binomial(int m, int r);

enum class StirlingKind { TypeA, TypeB };

/// q-Stirling numbers: Stir_q(n,k) = [k]_q Stir_q(n-1,k) + Stir_q(n-1,k-1),
/// type B with [2k+1]_q in place of [k]_q. Stir_q(0,k) = delta_{k,0}.
QuvPolynomial q_stirling(int n, int k, StirlingKind kind);

/// Ordinary binomial coefficient, zero outside range.
Integer binomial(long long m, long long r);
Integer factorial(int n);
/// a(a-1)/2 for every integer a; equals 1 at a = -1, unlike binomial(a, 2).
long long choose_two(long long a);

}  // namespace coinv
