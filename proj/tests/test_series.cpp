#include <doctest.h>

#include <map>
#include <random>

#include "modeta/error.hpp"
#include "modeta/series.hpp"
#include "oracles.hpp"

using namespace modeta;
using namespace oracle;

namespace {

const std::vector<int> kD = characteristic_weights(0);

GradedSeries poly_d(std::initializer_list<std::pair<int, Rational>> terms, int order) {
  GradedSeries s(kD, order);
  for (const auto& [power, c] : terms) s.add_term({power}, c);
  return s;
}

GradedSeries sinh_direct(const Rational& scale, int order) {
  GradedSeries s(kD, order);
  Rational power = scale / 2;
  for (int m = 1; 2 * m <= order; m += 2) {
    s.add_term({m}, power / factorial(m));
    power *= scale * scale / 4;
  }
  return s;
}

}  // namespace

TEST_CASE("graded arithmetic") {
  const auto x = poly_d({{0, 1}, {1, 1}}, 8);
  const auto y = poly_d({{0, 1}, {1, -1}}, 8);
  CHECK(x * y == poly_d({{0, 1}, {2, -1}}, 8));
  CHECK((x * y).homogeneous_part(4) == poly_d({{2, -1}}, 8));
  CHECK(x.scaled(0).is_zero());
  CHECK((x - x).is_zero());
  CHECK((x + y).coefficient({0}) == 2);
}

TEST_CASE("terms beyond the order are dropped") {
  auto s = poly_d({{0, 1}, {3, 5}}, 4);
  CHECK(s.terms().size() == 1);
  const auto t = poly_d({{1, 1}}, 4);
  CHECK((t * t * t).is_zero());
}

TEST_CASE("truncation commutes with multiplication") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-9, 9);
  const auto weights = characteristic_weights(2);
  for (int trial = 0; trial < 30; ++trial) {
    GradedSeries s(weights, 12), t(weights, 12);
    for (int d = 0; d <= 6; ++d)
      for (int p1 = 0; p1 <= 3; ++p1)
        for (int p2 = 0; p2 <= 1; ++p2) {
          s.add_term({d, p1, p2}, Rational(coef(rng), 1 + trial % 5));
          t.add_term({d, p1, p2}, Rational(coef(rng), 3));
        }
    for (int k : {0, 2, 4, 8, 10}) {
      CHECK((s * t).truncated(k) == (s.truncated(k) * t.truncated(k)).truncated(k));
    }
  }
}

TEST_CASE("inverse, exp and log") {
  const auto x = poly_d({{0, 3}, {1, Rational(1, 2)}, {2, -7}}, 12);
  CHECK(x * x.inverse() == GradedSeries::constant(kD, 12, 1));
  const auto u = poly_d({{1, 2}, {3, Rational(-1, 5)}}, 12);
  CHECK(log_series(exp_series(u)) == u);
  CHECK_THROWS_AS(poly_d({{1, 1}}, 4).inverse(), Error);
}

TEST_CASE("sinh ratio fixtures") {
  CHECK(sinh_ratio(1, 12) == GradedSeries::constant(kD, 12, 1));
  const auto two = sinh_ratio(2, 4);
  CHECK(two.coefficient({0}) == Rational(1, 2));
  CHECK(two.coefficient({2}) == Rational(-1, 16));
  CHECK(sinh_ratio(3, 4).coefficient({2}) == Rational(-1, 9));
  for (int ell = 1; ell <= 6; ++ell) {
    CHECK(sinh_ratio(ell, 4).coefficient({2}) == Rational(-(ell * ell - 1), 24 * ell));
    CHECK(sinh_ratio(ell, 4).coefficient({0}) == Rational(1, ell));
  }
}

TEST_CASE("sinh ratio times sinh(ell d/2) is sinh(d/2)") {
  for (int ell = 1; ell <= 6; ++ell) {
    for (int order : {4, 8, 12}) {
      const auto ratio = sinh_ratio(ell, order);
      CHECK((ratio * sinh_direct(ell, order)).truncated(order) == sinh_direct(1, order));
      CHECK(sinh_series(ell, order) == sinh_direct(ell, order));
      for (const auto& [m, c] : ratio.terms()) CHECK(m[0] % 2 == 0);
    }
  }
}

TEST_CASE("Q coefficients match the Bernoulli closed form") {
  CHECK(ahat_characteristic_coefficients(6) == q_coefficients(6));
  CHECK(q_coefficients(2)[1] == Rational(-1, 24));
  CHECK(q_coefficients(2)[2] == Rational(7, 5760));
}

TEST_CASE("A-hat low degrees") {
  const auto table = ahat_table(3);
  const auto weights = characteristic_weights(3);
  CHECK(table[0] == GradedSeries::constant(weights, 12, 1));
  CHECK(table[1].terms().size() == 1);
  CHECK(table[1].coefficient(characteristic_monomial(3, 0, {1})) == Rational(-1, 24));
  CHECK(table[2].coefficient(characteristic_monomial(3, 0, {2})) == Rational(7, 5760));
  CHECK(table[2].coefficient(characteristic_monomial(3, 0, {0, 1})) == Rational(-4, 5760));
  CHECK(table[3].coefficient(characteristic_monomial(3, 0, {3})) == Rational(-31, 967680));
  CHECK(table[3].coefficient(characteristic_monomial(3, 0, {1, 1})) == Rational(44, 967680));
  CHECK(table[3].coefficient(characteristic_monomial(3, 0, {0, 0, 1})) == Rational(-16, 967680));
  CHECK(table[1].to_string(characteristic_names(3)) == "-1/24*p1");
}

TEST_CASE("A-hat table against the symmetric function oracle") {
  for (int n = 1; n <= 5; ++n) {
    const auto table = ahat_table(n);
    for (int k = 1; k <= n; ++k) {
      const auto oracle = ahat_oracle(k);
      CHECK(table[k].terms().size() == oracle.size());
      for (const auto& [exps, c] : oracle) {
        std::vector<int> padded(exps);
        padded.resize(static_cast<std::size_t>(n), 0);
        CHECK(table[k].coefficient(characteristic_monomial(n, 0, padded)) == c);
      }
    }
  }
}

TEST_CASE("A-hat is multiplicative on Whitney sums") {
  for (int n : {2, 3}) {
    const int order = 4 * n;
    const auto total = ahat_table(n).total(order);
    std::vector<int> layout;  // p_i(E) then p_i(F)
    for (int side = 0; side < 2; ++side)
      for (int i = 1; i <= n; ++i) layout.push_back(4 * i);
    auto var = [&](int side, int i) { return GradedSeries::variable(layout, order, side * n + i - 1); };
    const GradedSeries zero(layout, order), one = GradedSeries::constant(layout, order, 1);
    auto p = [&](int side, int i) { return i == 0 ? one : var(side, i); };
    std::vector<GradedSeries> e{zero}, f{zero}, sum{zero};
    for (int i = 1; i <= n; ++i) {
      e.push_back(var(0, i));
      f.push_back(var(1, i));
      GradedSeries s = zero;
      for (int j = 0; j <= i; ++j) s = s + p(0, j) * p(1, i - j);
      sum.push_back(s);
    }
    CHECK(substitute(total, sum, order) == (substitute(total, e, order) * substitute(total, f, order)).truncated(order));
  }
}

TEST_CASE("layout checks") {
  const GradedSeries a(characteristic_weights(1), 4), b(characteristic_weights(2), 4);
  CHECK_THROWS_AS(a + b, Error);
  CHECK(a.embedded(characteristic_weights(2)).weights() == characteristic_weights(2));
  CHECK_THROWS_AS(GradedSeries({0}, 4), Error);
  CHECK_THROWS_AS(sinh_ratio(0, 4), Error);
}
