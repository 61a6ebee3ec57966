#include "coinv/qpoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace coinv {

QuvPolynomial::QuvPolynomial(long long constant) : QuvPolynomial(Integer(constant)) {}

QuvPolynomial::QuvPolynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Exponent{}, constant);
}

QuvPolynomial QuvPolynomial::monomial(Exponent e, const Integer& coeff) {
  if (e.q < 0 || e.u < 0 || e.v < 0) throw std::invalid_argument("negative exponent in monomial");
  QuvPolynomial p;
  p.add_term(e, coeff);
  return p;
}

Integer QuvPolynomial::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void QuvPolynomial::add_term(Exponent e, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

int QuvPolynomial::max_q_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, e.q);
  return best;
}

namespace {

Integer ipow(const Integer& base, int exp) {
  Integer r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

Integer QuvPolynomial::evaluate(const Integer& q, const Integer& u, const Integer& v) const {
  Integer total = 0;
  for (const auto& [e, c] : terms_) total += c * ipow(q, e.q) * ipow(u, e.u) * ipow(v, e.v);
  return total;
}

QuvPolynomial QuvPolynomial::uv_coefficient(int b, int c) const {
  QuvPolynomial out;
  for (const auto& [e, coeff] : terms_)
    if (e.u == b && e.v == c) out.add_term({e.q, 0, 0}, coeff);
  return out;
}

QuvPolynomial QuvPolynomial::with_q_zero() const {
  QuvPolynomial out;
  for (const auto& [e, c] : terms_)
    if (e.q == 0) out.add_term(e, c);
  return out;
}

QuvPolynomial QuvPolynomial::with_u_zero() const {
  QuvPolynomial out;
  for (const auto& [e, c] : terms_)
    if (e.u == 0) out.add_term(e, c);
  return out;
}

QuvPolynomial QuvPolynomial::with_v_zero() const {
  QuvPolynomial out;
  for (const auto& [e, c] : terms_)
    if (e.v == 0) out.add_term(e, c);
  return out;
}

QuvPolynomial& QuvPolynomial::operator+=(const QuvPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

QuvPolynomial& QuvPolynomial::operator-=(const QuvPolynomial& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

QuvPolynomial operator*(const QuvPolynomial& lhs, const QuvPolynomial& rhs) {
  QuvPolynomial out;
  for (const auto& [a, ca] : lhs.terms_)
    for (const auto& [b, cb] : rhs.terms_) out.add_term({a.q + b.q, a.u + b.u, a.v + b.v}, ca * cb);
  return out;
}

QuvPolynomial& QuvPolynomial::operator*=(const QuvPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

QuvPolynomial QuvPolynomial::operator-() const {
  QuvPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

namespace {

void append_variable(std::string& s, char name, int exp) {
  if (exp == 0) return;
  s += name;
  if (exp > 1) s += "^" + std::to_string(exp);
}

std::string monomial_text(Exponent e) {
  std::string s;
  append_variable(s, 'q', e.q);
  append_variable(s, 'u', e.u);
  append_variable(s, 'v', e.v);
  return s;
}

// Joins signed terms as "a + b - c".
template <typename Range>
std::string join_terms(const Range& terms) {
  std::string out;
  bool first = true;
  for (const auto& [coeff, body] : terms) {
    const bool negative = coeff < 0;
    const Integer mag = negative ? Integer(-coeff) : coeff;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (body.empty()) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str();
      out += body;
    }
    first = false;
  }
  return first ? std::string("0") : out;
}

}  // namespace

std::string QuvPolynomial::to_string() const {
  std::vector<std::pair<Integer, std::string>> parts;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) parts.emplace_back(it->second, monomial_text(it->first));
  return join_terms(parts);
}

std::string QuvPolynomial::to_grouped_string() const {
  // (u+v total degree, -u) ordering of groups.
  std::map<std::pair<int, int>, QuvPolynomial> groups;
  for (const auto& [e, c] : terms_) groups[{e.u + e.v, -e.u}].add_term({e.q, 0, 0}, c);
  std::string out;
  bool first = true;
  for (const auto& [key, qpart] : groups) {
    const int b = -key.second;
    const int c = key.first - b;
    std::string uv;
    append_variable(uv, 'u', b);
    append_variable(uv, 'v', c);
    std::string piece;
    bool negate = false;
    if (qpart.term_count() == 1) {
      const auto& [e, coeff] = *qpart.terms().begin();
      negate = coeff < 0;
      const Integer mag = negate ? Integer(-coeff) : coeff;
      std::string body = monomial_text(e) + uv;
      if (body.empty())
        piece = mag.str();
      else
        piece = (mag == 1 ? std::string() : mag.str()) + body;
    } else {
      piece = uv.empty() ? "(" + qpart.to_string() + ")" : "(" + qpart.to_string() + ")" + uv;
    }
    if (first)
      out += negate ? "-" + piece : piece;
    else
      out += (negate ? " - " : " + ") + piece;
    first = false;
  }
  return first ? std::string("0") : out;
}

nlohmann::json QuvPolynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : terms_) arr.push_back({{"q", e.q}, {"u", e.u}, {"v", e.v}, {"coeff", c.str()}});
  return arr;
}

QuvPolynomial QuvPolynomial::from_json(const nlohmann::json& j) {
  QuvPolynomial p;
  for (const auto& rec : j) {
    Exponent e{rec.at("q").get<int>(), rec.at("u").get<int>(), rec.at("v").get<int>()};
    if (e.q < 0 || e.u < 0 || e.v < 0) throw std::invalid_argument("negative exponent in polynomial JSON");
    p.add_term(e, Integer(rec.at("coeff").get<std::string>()));
  }
  return p;
}

std::ostream& operator<<(std::ostream& os, const QuvPolynomial& p) { return os << p.to_string(); }

QuvPolynomial q_integer(int k) {
  QuvPolynomial p;
  for (int i = 0; i < k; ++i) p.add_term({i, 0, 0}, 1);
  return p;
}

QuvPolynomial q_factorial(int k) {
  QuvPolynomial p = 1;
  for (int i = 1; i <= k; ++i) p *= q_integer(i);
  return p;
}

QuvPolynomial q_double_factorial_even(int k) {
  QuvPolynomial p = 1;
  for (int i = 1; i <= k; ++i) p *= q_integer(2 * i);
  return p;
}

QuvPolynomial q_binomial(int m, int r) {
  if (m < 0 || r < 0 || r > m) return {};
  // Row-by-row q-Pascal: [m,r] = [m-1,r-1] + q^r [m-1,r].
  std::vector<QuvPolynomial> row{QuvPolynomial(1)};
  for (int i = 1; i <= m; ++i) {
    std::vector<QuvPolynomial> next(i + 1);
    next[0] = 1;
    next[i] = 1;
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + QuvPolynomial::q_power(j) * row[j];
    row = std::move(next);
  }
  return row[r];
}

QuvPolynomial q_stirling(int n, int k, StirlingKind kind) {
  if (n < 0) throw std::invalid_argument("q_stirling: n must be nonnegative");
  if (k < 0 || k > n) return {};
  // table[j] holds Stir_q(i, j) for the current i.
  std::vector<QuvPolynomial> table(n + 1);
  table[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 0; --j) {
      const int bracket = kind == StirlingKind::TypeA ? j : 2 * j + 1;
      QuvPolynomial next = q_integer(bracket) * table[j];
      if (j > 0) next += table[j - 1];
      table[j] = std::move(next);
    }
  }
  return table[k];
}

Integer binomial(long long m, long long r) {
  if (m < 0 || r < 0 || r > m) return 0;
  Integer out = 1;
  for (long long i = 1; i <= r; ++i) out = out * (m - r + i) / i;
  return out;
}

long long choose_two(long long a) { return a * (a - 1) / 2; }

Integer factorial(int n) {
  Integer out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace coinv
