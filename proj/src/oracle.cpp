#include "coinv/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "coinv/parallel.hpp"

namespace coinv {

SuperMonomial::SuperMonomial(const std::vector<int>& x_exponents, std::uint32_t theta_mask, std::uint32_t xi_mask)
    : theta_(theta_mask), xi_(xi_mask), n_(static_cast<int>(x_exponents.size())) {
  if (n_ < 1 || n_ > kMaxVariables) throw std::invalid_argument("SuperMonomial supports 1..8 variables");
  const std::uint32_t allowed = (1U << n_) - 1;
  if ((theta_mask & ~allowed) || (xi_mask & ~allowed)) throw std::invalid_argument("fermion index out of range");
  for (int i = 0; i < n_; ++i) {
    if (x_exponents[i] < 0 || x_exponents[i] > 255) throw std::invalid_argument("x-exponent out of range");
    packed_x_ |= static_cast<std::uint64_t>(x_exponents[i]) << shift(i);
  }
}

std::vector<int> SuperMonomial::x_exponents() const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = x(i);
  return out;
}

Degree SuperMonomial::degree() const {
  int r = 0;
  for (int i = 0; i < n_; ++i) r += x(i);
  return {r, std::popcount(theta_), std::popcount(xi_)};
}

std::string SuperMonomial::to_string() const {
  std::string out;
  auto factor = [&](const std::string& f) {
    if (!out.empty()) out += '*';
    out += f;
  };
  for (int i = 0; i < n_; ++i) {
    if (x(i) == 0) continue;
    factor("x" + std::to_string(i + 1) + (x(i) > 1 ? "^" + std::to_string(x(i)) : ""));
  }
  for (int i = 0; i < n_; ++i)
    if ((theta_ >> i) & 1U) factor("th" + std::to_string(i + 1));
  for (int i = 0; i < n_; ++i)
    if ((xi_ >> i) & 1U) factor("xi" + std::to_string(i + 1));
  return out.empty() ? "1" : out;
}

namespace {

/// Parity of moving the factors of `right` leftwards past the larger factors of `left`.
int merge_sign(std::uint32_t left, std::uint32_t right) {
  int swaps = 0;
  for (std::uint32_t r = right; r; r &= r - 1) {
    const int j = std::countr_zero(r);
    swaps += std::popcount(left >> (j + 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

int sequence_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

SignedMonomial multiply(const SuperMonomial& a, const SuperMonomial& b) {
  if (a.n() != b.n()) throw std::invalid_argument("monomials live in different rings");
  if ((a.theta_mask() & b.theta_mask()) || (a.xi_mask() & b.xi_mask())) return {0, SuperMonomial()};
  std::vector<int> x(a.n());
  for (int i = 0; i < a.n(); ++i) x[i] = a.x(i) + b.x(i);
  int sign = (std::popcount(a.xi_mask()) * std::popcount(b.theta_mask())) % 2 == 0 ? 1 : -1;
  sign *= merge_sign(a.theta_mask(), b.theta_mask());
  sign *= merge_sign(a.xi_mask(), b.xi_mask());
  return {sign, SuperMonomial(x, a.theta_mask() | b.theta_mask(), a.xi_mask() | b.xi_mask())};
}

std::vector<GroupElement> group_elements(int n, GroupType group) {
  if (n < 1 || n > SuperMonomial::kMaxVariables) throw std::invalid_argument("group size out of range");
  std::vector<GroupElement> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (group == GroupType::Symmetric) {
      out.push_back({perm, std::vector<int>(n, 1)});
      continue;
    }
    for (std::uint32_t flips = 0; flips < (1U << n); ++flips) {
      std::vector<int> signs(n);
      for (int i = 0; i < n; ++i) signs[i] = (flips >> i) & 1U ? -1 : 1;
      out.push_back({perm, signs});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SignedMonomial group_action(const GroupElement& g, const SuperMonomial& m) {
  const int n = m.n();
  if (static_cast<int>(g.image.size()) != n) throw std::invalid_argument("group element has the wrong size");
  std::vector<int> x(n, 0);
  std::vector<int> theta_seq, xi_seq;
  std::uint32_t theta = 0, xi = 0;
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    const int target = g.image[i];
    x[target] = m.x(i);
    int exponent = m.x(i);
    if ((m.theta_mask() >> i) & 1U) {
      theta_seq.push_back(target);
      theta |= 1U << target;
      ++exponent;
    }
    if ((m.xi_mask() >> i) & 1U) {
      xi_seq.push_back(target);
      xi |= 1U << target;
      ++exponent;
    }
    if (g.signs[i] < 0 && exponent % 2 == 1) sign = -sign;
  }
  sign *= sequence_sign(theta_seq) * sequence_sign(xi_seq);
  return {sign, SuperMonomial(x, theta, xi)};
}

namespace {

void compositions_rec(int i, int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  const int n = static_cast<int>(cur.size());
  if (i == n - 1) {
    cur[i] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur[i] = e;
    compositions_rec(i + 1, remaining - e, cur, out);
  }
}

std::vector<std::uint32_t> masks_of_size(int n, int k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m)
    if (std::popcount(m) == k) out.push_back(m);
  return out;
}

}  // namespace

std::vector<SuperMonomial> monomials_of_degree(int n, Degree d) {
  if (n < 1 || n > SuperMonomial::kMaxVariables) throw std::invalid_argument("n out of range");
  std::vector<SuperMonomial> out;
  if (d.r < 0 || d.s < 0 || d.t < 0 || d.s > n || d.t > n) return out;
  std::vector<std::vector<int>> xs;
  std::vector<int> cur(n, 0);
  compositions_rec(0, d.r, cur, xs);
  const auto thetas = masks_of_size(n, d.s);
  const auto xis = masks_of_size(n, d.t);
  out.reserve(xs.size() * thetas.size() * xis.size());
  for (const auto& x : xs)
    for (auto th : thetas)
      for (auto xi : xis) out.emplace_back(x, th, xi);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Row = std::vector<std::pair<int, Integer>>;

void normalize(Row& row) {
  Integer g = 0;
  for (const auto& [c, v] : row) g = gcd(g, v);
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) v /= g;
}

/// Row-echelon basis with pivots on leading columns, fraction-free.
class Echelon {
 public:
  bool insert(Row row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        normalize(row);
        pivots_.emplace(row.front().first, std::move(row));
        return true;
      }
      row = eliminate(row, it->second);
      if (!row.empty()) normalize(row);
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

  std::vector<Row> rows() const {
    std::vector<Row> out;
    out.reserve(pivots_.size());
    for (const auto& [c, r] : pivots_) out.push_back(r);
    return out;
  }

 private:
  static Row eliminate(const Row& row, const Row& pivot) {
    const Integer a = pivot.front().second;
    const Integer b = row.front().second;
    Row out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < row.size() || j < pivot.size()) {
      if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        out.emplace_back(row[i].first, a * row[i].second);
        ++i;
      } else if (i == row.size() || pivot[j].first < row[i].first) {
        out.emplace_back(pivot[j].first, -b * pivot[j].second);
        ++j;
      } else {
        Integer v = a * row[i].second - b * pivot[j].second;
        if (v != 0) out.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  std::map<int, Row> pivots_;
};

struct Piece {
  std::vector<SuperMonomial> columns;
  std::vector<Row> ideal_basis;
};

class ColumnIndex {
 public:
  explicit ColumnIndex(const std::vector<SuperMonomial>& columns) : columns_(columns) {}
  int operator()(const SuperMonomial& m) const {
    auto it = std::lower_bound(columns_.begin(), columns_.end(), m);
    if (it == columns_.end() || *it != m) throw std::logic_error("monomial outside its graded piece");
    return static_cast<int>(it - columns_.begin());
  }

 private:
  const std::vector<SuperMonomial>& columns_;
};

Row to_row(const std::map<int, Integer>& entries) {
  Row out;
  for (const auto& [c, v] : entries)
    if (v != 0) out.emplace_back(c, v);
  return out;
}

Row reynolds_row(const std::vector<GroupElement>& group, const SuperMonomial& m, const ColumnIndex& index) {
  std::map<int, Integer> acc;
  for (const auto& g : group) {
    const SignedMonomial image = group_action(g, m);
    acc[index(image.monomial)] += image.sign;
  }
  return to_row(acc);
}

std::vector<SuperMonomial> single_variables(int n) {
  std::vector<SuperMonomial> out;
  for (int i = 0; i < n; ++i) {
    std::vector<int> x(n, 0);
    x[i] = 1;
    out.emplace_back(x, 0, 0);
  }
  for (int i = 0; i < n; ++i) out.emplace_back(std::vector<int>(n, 0), 1U << i, 0);
  for (int i = 0; i < n; ++i) out.emplace_back(std::vector<int>(n, 0), 0, 1U << i);
  return out;
}

Piece compute_piece(int n, Degree d, const std::vector<GroupElement>& group, const std::map<Degree, Piece>& lower,
                    const OracleOptions& options) {
  Piece piece;
  piece.columns = monomials_of_degree(n, d);
  if (piece.columns.size() > options.max_monomials)
    throw std::runtime_error("graded piece (" + std::to_string(d.r) + "," + std::to_string(d.s) + "," +
                             std::to_string(d.t) + ") has " + std::to_string(piece.columns.size()) +
                             " monomials, above the cap of " + std::to_string(options.max_monomials));
  if (d.total() == 0) return piece;
  const ColumnIndex index(piece.columns);
  Echelon echelon;
  for (const SuperMonomial& var : single_variables(n)) {
    const Degree vd = var.degree();
    auto it = lower.find({d.r - vd.r, d.s - vd.s, d.t - vd.t});
    if (it == lower.end()) continue;
    for (const Row& row : it->second.ideal_basis) {
      std::map<int, Integer> acc;
      for (const auto& [c, v] : row) {
        const SignedMonomial p = multiply(var, it->second.columns[c]);
        if (p.sign != 0) acc[index(p.monomial)] += p.sign * v;
      }
      echelon.insert(to_row(acc));
    }
  }
  if (!options.generator_degree_cap || d.total() <= *options.generator_degree_cap)
    for (const SuperMonomial& m : piece.columns) echelon.insert(reynolds_row(group, m, index));
  piece.ideal_basis = echelon.rows();
  return piece;
}

std::map<Degree, Piece> compute_pieces(int n, GroupType group_type, Degree top, const OracleOptions& options) {
  if (n < 1 || n > SuperMonomial::kMaxVariables) throw std::invalid_argument("n out of range");
  const auto group = group_elements(n, group_type);
  std::map<Degree, Piece> pieces;
  for (int level = 0; level <= top.r + top.s + top.t; ++level) {
    std::vector<Degree> batch;
    for (int r = 0; r <= top.r; ++r)
      for (int s = 0; s <= top.s; ++s) {
        const int t = level - r - s;
        if (t >= 0 && t <= top.t) batch.push_back({r, s, t});
      }
    auto done = parallel_map<Piece>(batch.size(), options.jobs,
                                    [&](std::size_t i) { return compute_piece(n, batch[i], group, pieces, options); });
    for (std::size_t i = 0; i < batch.size(); ++i) pieces.emplace(batch[i], std::move(done[i]));
  }
  return pieces;
}

}  // namespace

std::vector<SuperPolynomial> invariant_subspace(int n, GroupType group, Degree d) {
  if (d.total() == 0) throw std::invalid_argument("invariant_subspace needs a positive degree");
  const auto columns = monomials_of_degree(n, d);
  const ColumnIndex index(columns);
  const auto elements = group_elements(n, group);
  Echelon echelon;
  for (const auto& m : columns) echelon.insert(reynolds_row(elements, m, index));
  std::vector<SuperPolynomial> out;
  for (const Row& row : echelon.rows()) {
    SuperPolynomial p;
    for (const auto& [c, v] : row) p[columns[c]] = v;
    out.push_back(std::move(p));
  }
  return out;
}

nlohmann::json OracleResult::report_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : pieces)
    out.push_back({{"degree", {p.degree.r, p.degree.s, p.degree.t}},
                   {"ambient", p.ambient},
                   {"ideal_rank", p.ideal_rank},
                   {"quotient", p.quotient}});
  return out;
}

OracleResult hilbert_via_oracle(int n, GroupType group, const OracleOptions& options) {
  if (options.max_x_degree < 0) throw std::invalid_argument("max x-degree must be nonnegative");
  const auto pieces = compute_pieces(n, group, {options.max_x_degree, n, n}, options);
  OracleResult result;
  result.complete = true;
  for (const auto& [d, piece] : pieces) {
    PieceReport rep{d, piece.columns.size(), piece.ideal_basis.size(), piece.columns.size() - piece.ideal_basis.size()};
    if (rep.quotient != 0) {
      result.hilbert += QuvPolynomial::monomial({d.r, d.s, d.t}, Integer(rep.quotient));
      if (d.r >= options.max_x_degree - 1) result.complete = false;
    }
    result.pieces.push_back(rep);
  }
  return result;
}

std::size_t quotient_dimension(int n, GroupType group, Degree d, int max_x_degree) {
  if (d.r > max_x_degree) throw std::invalid_argument("degree exceeds the x-degree bound");
  if (d.r < 0 || d.s < 0 || d.t < 0) throw std::invalid_argument("degree must be nonnegative");
  OracleOptions options;
  options.max_x_degree = max_x_degree;
  const auto pieces = compute_pieces(n, group, d, options);
  const Piece& p = pieces.at(d);
  return p.columns.size() - p.ideal_basis.size();
}

}  // namespace coinv
