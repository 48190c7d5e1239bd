#pragma once

// Truncated graded polynomial algebra over Q. A series lives in a fixed set
// of commuting variables, each with a positive degree; every stored monomial
// has total degree <= order(). Products and sums drop whatever exceeds the
// order, so (s*t).truncated(k) == (s.truncated(k) * t.truncated(k)).truncated(k).
//
// The characteristic-class layout uses variable 0 = d (degree 2) and
// variable i = p_i (degree 4i).

#include <map>
#include <span>
#include <string>
#include <vector>

#include "modeta/rational.hpp"

namespace modeta {

using Monomial = std::vector<int>;

class GradedSeries {
 public:
  GradedSeries(std::vector<int> weights, int order);

  static GradedSeries constant(std::vector<int> weights, int order, const Rational& value);
  static GradedSeries variable(std::vector<int> weights, int order, int index);

  const std::vector<int>& weights() const noexcept { return weights_; }
  int order() const noexcept { return order_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  int degree(const Monomial& m) const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Adds c * m; silently dropped when deg(m) > order().
  void add_term(const Monomial& m, const Rational& c);

  GradedSeries operator+(const GradedSeries& other) const;
  GradedSeries operator-(const GradedSeries& other) const;
  GradedSeries operator-() const;
  GradedSeries operator*(const GradedSeries& other) const;
  GradedSeries scaled(const Rational& factor) const;

  /// Homogeneous component of the given degree.
  GradedSeries homogeneous_part(int degree) const;
  GradedSeries truncated(int order) const;

  /// Multiplicative inverse of a unit (nonzero constant term), built degree
  /// by degree.
  GradedSeries inverse() const;

  /// Same terms placed in a layout with more variables appended.
  GradedSeries embedded(const std::vector<int>& weights) const;

  /// Monomials sorted by degree then exponents, e.g. "1/1 - 1/24*p1".
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const GradedSeries& x, const GradedSeries& y) {
    return x.weights_ == y.weights_ && x.order_ == y.order_ && x.terms_ == y.terms_;
  }

 private:
  void require_compatible(const GradedSeries& other) const;

  std::vector<int> weights_;
  int order_;
  std::map<Monomial, Rational> terms_;  // no zero coefficients stored
};

/// exp(x) for x without constant term.
GradedSeries exp_series(const GradedSeries& x);

/// log(x) for x with constant term 1.
GradedSeries log_series(const GradedSeries& x);

/// Evaluates a polynomial at series values: variable i of `poly` is replaced
/// by values[i]. All values share one layout and the result uses `order`.
GradedSeries substitute(const GradedSeries& poly, std::span<const GradedSeries> values, int order);

/// Layout {d, p_1, ..., p_n}: weights {2, 4, 8, ..., 4n}.
std::vector<int> characteristic_weights(int pontryagin_count);
std::vector<std::string> characteristic_names(int pontryagin_count);

/// d^j p_1^{e_1} ... p_n^{e_n} in the characteristic layout.
Monomial characteristic_monomial(int pontryagin_count, int d_power, const std::vector<int>& p_powers = {});

/// sinh(d/2) / sinh(ell d/2) as a series in d (characteristic layout with
/// `pontryagin_count` extra variables, all unused). Only even powers of d.
GradedSeries sinh_ratio(int ell, int order, int pontryagin_count = 0);

/// sinh(ell d / 2) itself, truncated.
GradedSeries sinh_series(const Rational& scale, int order, int pontryagin_count = 0);

/// Coefficients b_j of Q(z) = (sqrt(z)/2) / sinh(sqrt(z)/2) = sum b_j z^j, j <= n.
std::vector<Rational> ahat_characteristic_coefficients(int n);

/// The multiplicative sequence of Q in the Pontryagin classes: A_0 = 1,
/// A_1 = -p_1/24, A_2 = (7p_1^2 - 4p_2)/5760, ...
class AhatTable {
 public:
  explicit AhatTable(std::vector<GradedSeries> polys) : polys_(std::move(polys)) {}

  int max_index() const noexcept { return static_cast<int>(polys_.size()) - 1; }
  /// Homogeneous of degree 4i, in characteristic_weights(max_index()).
  const GradedSeries& operator[](int i) const { return polys_.at(static_cast<std::size_t>(i)); }
  /// A_0 + A_1 + ... + A_n, truncated at degree `order`.
  GradedSeries total(int order) const;

 private:
  std::vector<GradedSeries> polys_;
};

/// Builds A_0..A_n from log Q expanded in power sums of the formal roots,
/// converting power sums to Pontryagin classes with Newton's identities.
AhatTable ahat_table(int n);

}  // namespace modeta
