#include "coinv/basis.hpp"

#include <charconv>
#include <stdexcept>

namespace coinv {

PathVariant path_variant(BasisVariant v) {
  switch (v) {
    case BasisVariant::A12:
    case BasisVariant::A11:
    case BasisVariant::A02:
      return PathVariant::TypeA;
    default:
      return PathVariant::TypeB;
  }
}

std::string to_string(BasisVariant v) {
  switch (v) {
    case BasisVariant::A12:
      return "A12";
    case BasisVariant::A11:
      return "A11";
    case BasisVariant::A02:
      return "A02";
    case BasisVariant::B12:
      return "B12";
    case BasisVariant::B11:
      return "B11";
  }
  return "?";
}

BasisVariant parse_basis_variant(std::string_view text) {
  for (BasisVariant v : {BasisVariant::A12, BasisVariant::A11, BasisVariant::A02, BasisVariant::B12, BasisVariant::B11})
    if (text == to_string(v)) return v;
  throw std::invalid_argument("unknown basis variant '" + std::string(text) + "'");
}

namespace {

PositionSet set_from_flags(const std::vector<std::uint8_t>& flags) {
  PositionSet s{static_cast<int>(flags.size()), 0};
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i]) s.mask |= 1U << i;
  return s;
}

bool uses_xi(BasisVariant v) { return v == BasisVariant::A12 || v == BasisVariant::A02 || v == BasisVariant::B12; }

}  // namespace

StairBound alpha_sequence(const PositionSet& theta, const PositionSet& xi) {
  if (theta.n != xi.n) throw std::invalid_argument("theta/xi sets disagree on n");
  const int n = theta.n;
  if (n < 1) throw std::invalid_argument("alpha_sequence needs n >= 1");
  if (theta.contains(1) || xi.contains(1)) throw std::invalid_argument("alpha_sequence: position 1 must be free");
  StairBound out;
  out.values.resize(n);
  out.values[0] = 0;
  for (int i = 2; i <= n; ++i) {
    const int v = out.values[i - 2] - 1 + !theta.contains(i) + !xi.contains(i);
    if (v < 0) throw std::invalid_argument("alpha_sequence: negative entry at position " + std::to_string(i));
    out.values[i - 1] = v;
  }
  return out;
}

StairBound beta_sequence(const PositionSet& theta, const PositionSet& xi) {
  if (theta.n != xi.n) throw std::invalid_argument("theta/xi sets disagree on n");
  const int n = theta.n;
  StairBound out;
  out.values.resize(n);
  int prev = 0;
  for (int i = 1; i <= n; ++i) {
    int v = i == 1 ? -1 + !theta.contains(1) + !xi.contains(1)
                   : prev - 2 + !theta.contains(i) + !theta.contains(i - 1) + !xi.contains(i) + !xi.contains(i - 1);
    if (v < 0) throw std::invalid_argument("beta_sequence: negative entry at position " + std::to_string(i));
    out.values[i - 1] = v;
    prev = v;
  }
  return out;
}

StairBound stair_bound(BasisVariant variant, const PositionSet& theta, const PositionSet& xi) {
  switch (variant) {
    case BasisVariant::A12:
    case BasisVariant::A11:
      return alpha_sequence(theta, xi);
    case BasisVariant::B12:
    case BasisVariant::B11:
      return beta_sequence(theta, xi);
    case BasisVariant::A02:
      alpha_sequence(theta, xi);
      return StairBound{std::vector<int>(theta.n, 0)};
  }
  throw std::logic_error("unreachable");
}

QuvPolynomial stair_q(const StairBound& bound) {
  QuvPolynomial out(1);
  for (int k : bound.values) out *= q_integer(k + 1);
  return out;
}

QuvPolynomial stair_q(const MotzkinPath& path) {
  const auto t = path.theta_set();
  const auto s = path.xi_set();
  return stair_q(path.variant() == PathVariant::TypeA ? alpha_sequence(t, s) : beta_sequence(t, s));
}

BasisElement::BasisElement(BasisVariant variant, std::vector<int> alpha, std::vector<std::uint8_t> beta,
                           std::vector<std::uint8_t> gamma)
    : variant_(variant), alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {
  const std::size_t n = alpha_.size();
  if (beta_.size() != n || gamma_.size() != n) throw std::invalid_argument("exponent vectors differ in length");
  if (n > 32) throw std::invalid_argument("n too large");
  if (path_variant(variant_) == PathVariant::TypeA && n == 0) throw std::invalid_argument("type A needs n >= 1");
  for (std::size_t i = 0; i < n; ++i) {
    if (beta_[i] > 1 || gamma_[i] > 1) throw std::invalid_argument("fermionic exponents must be 0 or 1");
    if (alpha_[i] < 0) throw std::invalid_argument("x-exponents must be nonnegative");
  }
  if (!uses_xi(variant_))
    for (auto g : gamma_)
      if (g) throw std::invalid_argument("this family has no xi variables");
  const StairBound bound = stair_bound(variant_, theta_set(), xi_set());
  for (std::size_t i = 0; i < n; ++i)
    if (alpha_[i] > bound.values[i])
      throw std::invalid_argument("x-exponent exceeds the staircase at position " + std::to_string(i + 1));
}

int BasisElement::deg_x() const {
  int d = 0;
  for (int a : alpha_) d += a;
  return d;
}

int BasisElement::deg_theta() const {
  int d = 0;
  for (auto b : beta_) d += b;
  return d;
}

int BasisElement::deg_xi() const {
  int d = 0;
  for (auto g : gamma_) d += g;
  return d;
}

PositionSet BasisElement::theta_set() const { return set_from_flags(beta_); }
PositionSet BasisElement::xi_set() const { return set_from_flags(gamma_); }
MotzkinPath BasisElement::path() const {
  return MotzkinPath::from_sets(theta_set(), xi_set(), path_variant(variant_));
}

std::string BasisElement::to_string() const {
  std::string out;
  auto factor = [&](const std::string& f) {
    if (!out.empty()) out += '*';
    out += f;
  };
  for (int i = 0; i < n(); ++i) {
    if (alpha_[i] == 0) continue;
    std::string f = "x" + std::to_string(i + 1);
    if (alpha_[i] > 1) f += "^" + std::to_string(alpha_[i]);
    factor(f);
  }
  for (int i = 0; i < n(); ++i)
    if (beta_[i]) factor("th" + std::to_string(i + 1));
  for (int i = 0; i < n(); ++i)
    if (gamma_[i]) factor("xi" + std::to_string(i + 1));
  return out.empty() ? "1" : out;
}

namespace {

int parse_positive(std::string_view text, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || v < 1)
    throw std::invalid_argument("malformed monomial '" + std::string(whole) + "'");
  return v;
}

}  // namespace

BasisElement BasisElement::parse(std::string_view text, int n, BasisVariant variant) {
  if (n < 0 || n > 32) throw std::invalid_argument("n out of range");
  std::vector<int> alpha(n, 0);
  std::vector<std::uint8_t> beta(n, 0), gamma(n, 0);
  if (text != "1") {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('*', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(pos, end - pos);
      pos = end + 1;
      auto index = [&](std::string_view digits) {
        const int i = parse_positive(digits, text);
        if (i > n) throw std::invalid_argument("variable index exceeds n in '" + std::string(text) + "'");
        return i - 1;
      };
      if (tok.starts_with("th")) {
        auto& slot = beta[index(tok.substr(2))];
        if (slot) throw std::invalid_argument("repeated fermion in '" + std::string(text) + "'");
        slot = 1;
      } else if (tok.starts_with("xi")) {
        auto& slot = gamma[index(tok.substr(2))];
        if (slot) throw std::invalid_argument("repeated fermion in '" + std::string(text) + "'");
        slot = 1;
      } else if (tok.starts_with("x")) {
        const auto caret = tok.find('^');
        const int i = index(tok.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1));
        const int e = caret == std::string_view::npos ? 1 : parse_positive(tok.substr(caret + 1), text);
        alpha[i] += e;
      } else {
        throw std::invalid_argument("malformed monomial '" + std::string(text) + "'");
      }
    }
  }
  return BasisElement(variant, std::move(alpha), std::move(beta), std::move(gamma));
}

nlohmann::json BasisElement::to_json() const {
  nlohmann::json theta = nlohmann::json::array(), xi = nlohmann::json::array();
  for (int i = 0; i < n(); ++i) {
    theta.push_back(static_cast<int>(beta_[i]));
    xi.push_back(static_cast<int>(gamma_[i]));
  }
  return {{"alpha", alpha_}, {"theta", theta}, {"xi", xi}};
}

class BasisEnumerator {
 public:
  BasisEnumerator(int n, BasisVariant variant) : n_(n), variant_(variant) {
    if (n < 0 || n > 32) throw std::invalid_argument("n out of range");
    if (path_variant(variant) == PathVariant::TypeA && n == 0) throw std::invalid_argument("type A needs n >= 1");
  }

  /// Calls visit(theta, xi, bound) for every admissible fermionic support.
  template <typename F>
  void for_each_support(F&& visit) const {
    if (variant_ == BasisVariant::A11 || variant_ == BasisVariant::B11) {
      PositionSet theta{n_, 0};
      const PositionSet none{n_, 0};
      const int first = variant_ == BasisVariant::A11 ? 2 : 1;
      supports_rec(first, theta, none, visit);
      return;
    }
    for_each_path(n_, path_variant(variant_), [&](const MotzkinPath& p) {
      const auto t = p.theta_set();
      const auto s = p.xi_set();
      visit(t, s, stair_bound(variant_, t, s));
    });
  }

  void run(const std::function<void(const BasisElement&)>& visit) const {
    for_each_support([&](const PositionSet& t, const PositionSet& s, const StairBound& bound) {
      fill(variant_, t, s, bound, visit);
    });
  }

  static void fill(BasisVariant variant, const PositionSet& t, const PositionSet& s, const StairBound& bound,
                   const std::function<void(const BasisElement&)>& visit) {
    const int n = t.n;
    BasisElement e;
    e.variant_ = variant;
    e.alpha_.assign(n, 0);
    e.beta_.assign(n, 0);
    e.gamma_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
      e.beta_[i] = t.contains(i + 1);
      e.gamma_[i] = s.contains(i + 1);
    }
    while (true) {
      visit(e);
      int i = n - 1;
      while (i >= 0 && e.alpha_[i] == bound.values[i]) e.alpha_[i--] = 0;
      if (i < 0) break;
      ++e.alpha_[i];
    }
  }

 private:
  template <typename F>
  void supports_rec(int i, PositionSet& theta, const PositionSet& none, F& visit) const {
    if (i > n_) {
      visit(theta, none, stair_bound(variant_, theta, none));
      return;
    }
    supports_rec(i + 1, theta, none, visit);
    theta.mask |= 1U << (i - 1);
    supports_rec(i + 1, theta, none, visit);
    theta.mask &= ~(1U << (i - 1));
  }

  int n_;
  BasisVariant variant_;
};

void for_each_basis_element(int n, BasisVariant variant, const std::function<void(const BasisElement&)>& visit) {
  BasisEnumerator(n, variant).run(visit);
}

std::vector<FermionicSupport> fermionic_supports(int n, BasisVariant variant) {
  std::vector<FermionicSupport> out;
  BasisEnumerator(n, variant).for_each_support([&](const PositionSet& t, const PositionSet& s, const StairBound& bound) {
    out.push_back({t, s, bound});
  });
  return out;
}

void for_each_element_with_support(BasisVariant variant, const FermionicSupport& support,
                                   const std::function<void(const BasisElement&)>& visit) {
  BasisEnumerator::fill(variant, support.theta, support.xi, support.bound, visit);
}

std::vector<BasisElement> enumerate_basis(int n, BasisVariant variant) {
  std::vector<BasisElement> out;
  for_each_basis_element(n, variant, [&](const BasisElement& b) { out.push_back(b); });
  return out;
}

Integer count_basis(int n, BasisVariant variant) {
  Integer total = 0;
  BasisEnumerator(n, variant).for_each_support([&](const PositionSet&, const PositionSet&, const StairBound& bound) {
    Integer prod = 1;
    for (int k : bound.values) prod *= k + 1;
    total += prod;
  });
  return total;
}

QuvPolynomial hilbert_series(int n, BasisVariant variant) {
  QuvPolynomial total;
  BasisEnumerator(n, variant).for_each_support([&](const PositionSet& t, const PositionSet& s, const StairBound& bound) {
    total += QuvPolynomial::monomial({0, t.count(), s.count()}) * stair_q(bound);
  });
  return total;
}

IndexSubset ascent_set(const BasisElement& b) {
  const int n = b.n();
  if (n < 1) throw std::invalid_argument("ascent_set needs n >= 1");
  const auto& a = b.alpha();
  const auto& t = b.beta();
  const auto& x = b.gamma();
  std::uint32_t mask = 0;
  for (int i = 0; i + 1 < n; ++i) {
    bool asc = false;
    if (t[i] < t[i + 1])
      asc = true;
    else if (t[i] == 1 && t[i + 1] == 1)
      asc = a[i] >= a[i + 1] + x[i + 1];
    else if (t[i] == 0 && t[i + 1] == 0)
      asc = a[i] < a[i + 1] + x[i + 1];
    if (asc) mask |= 1U << i;
  }
  return IndexSubset(n, mask);
}

Integer count_by_height(int n, int r) {
  if (n < 1) throw std::invalid_argument("count_by_height needs n >= 1");
  if (r < 0 || r > n - 1) return 0;
  return factorial(n) * binomial(n - 1, r);
}

Integer count_by_height_recursive(int n, int r) {
  if (n < 1) throw std::invalid_argument("count_by_height needs n >= 1");
  if (r < 0 || r > n - 1) return 0;
  std::vector<Integer> row(n + 2, 0);
  row[0] = 1;
  for (int m = 2; m <= n; ++m) {
    std::vector<Integer> next(n + 2, 0);
    for (int k = 0; k < m; ++k) {
      Integer s = 2 * row[k] + row[k + 1];
      if (k > 0) s += row[k - 1];
      next[k] = (k + 1) * s;
    }
    row = std::move(next);
  }
  return row[r];
}

namespace {

struct TypeBRow {
  std::vector<Integer> e, up, down;
};

TypeBRow type_b_row(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const int width = 2 * n + 4;
  TypeBRow row{std::vector<Integer>(width, 0), std::vector<Integer>(width, 0), std::vector<Integer>(width, 0)};
  row.e[0] = 1;
  auto at = [&](const std::vector<Integer>& v, int r) -> Integer { return r < 0 || r >= width ? Integer(0) : v[r]; };
  for (int m = 1; m <= n; ++m) {
    TypeBRow next{std::vector<Integer>(width, 0), std::vector<Integer>(width, 0), std::vector<Integer>(width, 0)};
    for (int r = 0; r < width; ++r) {
      next.e[r] = 2 * (r + 1) * (at(row.e, r) + at(row.up, r - 1) + at(row.down, r + 1));
      next.up[r] = (r + 1) * (at(row.e, r - 1) + at(row.up, r - 2) + at(row.down, r));
      next.down[r] = (r + 1) * (at(row.e, r + 1) + at(row.up, r) + at(row.down, r + 2));
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

Integer count_type_b_refined(int n, int r, StepClass cls) {
  const TypeBRow row = type_b_row(n);
  if (r < 0 || r >= static_cast<int>(row.e.size())) return 0;
  switch (cls) {
    case StepClass::E:
      return row.e[r];
    case StepClass::U:
      return row.up[r];
    case StepClass::D:
      return row.down[r];
  }
  return 0;
}

Integer count_type_b_refined_closed(int n, int r, StepClass cls) {
  if (n < 1) throw std::invalid_argument("closed forms need n >= 1");
  if (r < 0) return 0;
  const Integer base = factorial(n - 1) * (Integer(1) << n);
  if (cls == StepClass::E) {
    if (r % 2 != 0) return 0;
    const int k = r / 2;
    return base * binomial(n - 1, k) * (2 * k + 1);
  }
  if (r % 2 != 1) return 0;
  const int k = (r - 1) / 2;
  if (cls == StepClass::U) return base * binomial(n - 1, k) * (k + 1);
  return base * binomial(n - 1, k) * (n - k - 1);
}

Integer count_type_b(int n) {
  const TypeBRow row = type_b_row(n);
  Integer total = 0;
  for (std::size_t r = 0; r < row.e.size(); ++r) total += row.e[r] + row.up[r] + row.down[r];
  return total;
}

QuvPolynomial hilbert_11_formula(int n, WeylType type) {
  if (n < 1) throw std::invalid_argument("hilbert_11_formula needs n >= 1");
  QuvPolynomial total;
  if (type == WeylType::TypeA) {
    for (int k = 1; k <= n; ++k)
      total += QuvPolynomial::u_power(n - k) * q_factorial(k) * q_stirling(n, k, StirlingKind::TypeA);
  } else {
    for (int k = 0; k <= n; ++k)
      total += QuvPolynomial::u_power(n - k) * q_double_factorial_even(k) * q_stirling(n, k, StirlingKind::TypeB);
  }
  return total;
}

}  // namespace coinv
