#include <doctest.h>

#include <random>

#include "coinv/qpoly.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace coinv;
using coinv::testing::read_poly;

TEST_CASE("zero coefficients are never stored") {
  QuvPolynomial p = QuvPolynomial::q_power(2);
  p -= QuvPolynomial::q_power(2);
  CHECK(p.is_zero());
  CHECK(p == QuvPolynomial());
  CHECK(p.max_q_degree() == -1);
  CHECK(QuvPolynomial(0).is_zero());
}

TEST_CASE("string forms") {
  CHECK(QuvPolynomial().to_string() == "0");
  CHECK(read_poly("q^2+3q+2").to_string() == "q^2 + 3q + 2");
  CHECK(read_poly("q+u+v+1").to_string() == "q + u + v + 1");
  CHECK(read_poly("-q+1").to_string() == "-q + 1");
  CHECK(read_poly("(q^2+3q+2)u + (q+3)uv").to_grouped_string() == "(q^2 + 3q + 2)u + (q + 3)uv");
  CHECK(read_poly("u^2v").to_grouped_string() == "u^2v");
}

TEST_CASE("json round trip") {
  const QuvPolynomial p = read_poly("(q^3 + 2q^2 + 2q + 1) + (q + 3)uv - 7v^2");
  CHECK(QuvPolynomial::from_json(p.to_json()) == p);
  const auto j = read_poly("2q").to_json();
  REQUIRE(j.size() == 1);
  CHECK(j[0]["q"] == 1);
  CHECK(j[0]["coeff"] == "2");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> exp(0, 3), coeff(-4, 4);
  auto random_poly = [&] {
    QuvPolynomial p;
    for (int i = 0; i < 5; ++i) p.add_term({exp(rng), exp(rng), exp(rng)}, coeff(rng));
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QuvPolynomial());
    CHECK((a * b).evaluate(2, 3, 5) == a.evaluate(2, 3, 5) * b.evaluate(2, 3, 5));
  }
}

TEST_CASE("coefficients grow past 64 bits") {
  QuvPolynomial p = QuvPolynomial(1) + QuvPolynomial::q_power(1);
  QuvPolynomial acc = 1;
  for (int i = 0; i < 80; ++i) acc *= p;
  CHECK(acc.coefficient({40, 0, 0}) == binomial(80, 40));
  CHECK(acc.sum_of_coefficients() == Integer(1) << 80);
}

TEST_CASE("specializations") {
  const QuvPolynomial p = read_poly("(q^2+1)u + qv + 3 + uv");
  CHECK(p.with_v_zero() == read_poly("(q^2+1)u + 3"));
  CHECK(p.with_u_zero() == read_poly("qv + 3"));
  CHECK(p.with_q_zero() == read_poly("u + 3 + uv"));
  CHECK(p.uv_coefficient(1, 0) == read_poly("q^2+1"));
  CHECK(p.uv_coefficient(2, 2).is_zero());
}

TEST_CASE("q-integers, factorials, binomials") {
  CHECK(q_integer(0).is_zero());
  CHECK(q_integer(3) == read_poly("1+q+q^2"));
  CHECK(q_factorial(3) == read_poly("(1+q)(1+q+q^2)"));
  CHECK(q_factorial(0) == QuvPolynomial(1));
  CHECK(q_double_factorial_even(2) == read_poly("(1+q)(1+q+q^2+q^3)"));
  CHECK(q_binomial(4, 2) == read_poly("1+q+2q^2+q^3+q^4"));
  CHECK(q_binomial(3, -1).is_zero());
  CHECK(q_binomial(3, 4).is_zero());
  CHECK(q_binomial(-1, 0).is_zero());
  for (int m = 0; m <= 9; ++m)
    for (int r = 0; r <= m; ++r) {
      CAPTURE(m);
      CAPTURE(r);
      CHECK(q_binomial(m, r) == coinv::testing::subset_qbinomial(m, r));
      CHECK(q_binomial(m, r).sum_of_coefficients() == binomial(m, r));
    }
}

TEST_CASE("q-Stirling recursion") {
  CHECK(q_stirling(0, 0, StirlingKind::TypeA) == QuvPolynomial(1));
  CHECK(q_stirling(3, 0, StirlingKind::TypeA).is_zero());
  CHECK(q_stirling(3, 2, StirlingKind::TypeA) == read_poly("2+q"));
  CHECK(q_stirling(2, 1, StirlingKind::TypeB) == read_poly("2+q+q^2"));
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) CHECK(q_stirling(n, k, StirlingKind::TypeA).evaluate(1, 1, 1) > 0);
}

TEST_CASE("integer helpers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(-1, 2) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  CHECK(choose_two(4) == 6);
  CHECK(choose_two(1) == 0);
  CHECK(choose_two(0) == 0);
  CHECK(choose_two(-1) == 1);
  CHECK(choose_two(-2) == 3);
}
