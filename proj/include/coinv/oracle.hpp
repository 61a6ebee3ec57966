#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coinv/qpoly.hpp"

namespace coinv {

/// Multidegree (x-degree, theta-degree, xi-degree).
struct Degree {
  int r = 0;
  int s = 0;
  int t = 0;

  int total() const { return r + s + t; }
  auto operator<=>(const Degree&) const = default;
};

/**
 * x^a theta_T xi_S in the canonical order: x-part, then theta factors by
 * ascending index, then xi factors by ascending index. At most 8 variables
 * per set, exponents below 256.
 */
class SuperMonomial {
 public:
  static constexpr int kMaxVariables = 8;

  SuperMonomial() = default;
  /// Throws std::invalid_argument on negative or oversized exponents.
  SuperMonomial(const std::vector<int>& x_exponents, std::uint32_t theta_mask, std::uint32_t xi_mask);

  int n() const { return n_; }
  int x(int i) const { return static_cast<int>((packed_x_ >> shift(i)) & 0xFFU); }
  std::vector<int> x_exponents() const;
  std::uint32_t theta_mask() const { return theta_; }
  std::uint32_t xi_mask() const { return xi_; }
  Degree degree() const;

  /// "x1^2*th1*xi2", or "1".
  std::string to_string() const;

  auto operator<=>(const SuperMonomial&) const = default;

 private:
  static int shift(int i) { return 8 * (kMaxVariables - 1 - i); }

  std::uint64_t packed_x_ = 0;
  std::uint32_t theta_ = 0;
  std::uint32_t xi_ = 0;
  int n_ = 0;
};

/// A monomial with a sign; sign 0 means the product vanished.
struct SignedMonomial {
  int sign = 1;
  SuperMonomial monomial;
};

/// Product in the canonical order, with the anticommutation sign.
SignedMonomial multiply(const SuperMonomial& a, const SuperMonomial& b);

enum class GroupType { Symmetric, Hyperoctahedral };

/// Index i (0-based) goes to image[i] (0-based) with sign signs[i].
struct GroupElement {
  std::vector<int> image;
  std::vector<int> signs;
};

/// All permutations (Symmetric) or signed permutations (Hyperoctahedral) of n letters.
std::vector<GroupElement> group_elements(int n, GroupType group);

/// Substitutes x_i -> e_i x_g(i), theta_i -> e_i theta_g(i), xi_i -> e_i xi_g(i)
/// and reorders into canonical form.
SignedMonomial group_action(const GroupElement& g, const SuperMonomial& m);

using SuperPolynomial = std::map<SuperMonomial, Integer>;

/// Canonically ordered monomials in n variables of the given multidegree.
std::vector<SuperMonomial> monomials_of_degree(int n, Degree d);

/// A linearly independent spanning set of the invariants in one multidegree,
/// from symmetrizing every monomial and reducing.
std::vector<SuperPolynomial> invariant_subspace(int n, GroupType group, Degree d);

struct OracleOptions {
  int max_x_degree = 0;
  int jobs = 1;
  /// Pieces whose ambient monomial count exceeds this abort with std::runtime_error.
  std::size_t max_monomials = 250000;
  /// Only invariants of total degree at most this generate the ideal.
  std::optional<int> generator_degree_cap;
};

struct PieceReport {
  Degree degree;
  std::size_t ambient = 0;
  std::size_t ideal_rank = 0;
  std::size_t quotient = 0;
};

struct OracleResult {
  QuvPolynomial hilbert;
  /// True iff every piece with x-degree in the top two values came out zero.
  bool complete = false;
  std::vector<PieceReport> pieces;

  nlohmann::json report_json() const;
};

/// Quotient dimensions of every piece with r <= max_x_degree and s, t <= n.
OracleResult hilbert_via_oracle(int n, GroupType group, const OracleOptions& options);

/// Dimension of one piece of the quotient.
std::size_t quotient_dimension(int n, GroupType group, Degree d, int max_x_degree);

}  // namespace coinv
