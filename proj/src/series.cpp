#include "modeta/series.hpp"

#include <algorithm>

#include "modeta/error.hpp"

namespace modeta {

GradedSeries::GradedSeries(std::vector<int> weights, int order) : weights_(std::move(weights)), order_(order) {
  if (order_ < 0) fail(ErrorCode::invalid_argument, "truncation order must be nonnegative");
  for (int w : weights_) {
    if (w <= 0) fail(ErrorCode::invalid_argument, "variable degrees must be positive");
  }
}

GradedSeries GradedSeries::constant(std::vector<int> weights, int order, const Rational& value) {
  GradedSeries s(std::move(weights), order);
  s.add_term(Monomial(s.weights_.size(), 0), value);
  return s;
}

GradedSeries GradedSeries::variable(std::vector<int> weights, int order, int index) {
  GradedSeries s(std::move(weights), order);
  if (index < 0 || index >= static_cast<int>(s.weights_.size())) {
    fail(ErrorCode::invalid_argument, "variable index out of range");
  }
  Monomial m(s.weights_.size(), 0);
  m[static_cast<std::size_t>(index)] = 1;
  s.add_term(m, 1);
  return s;
}

int GradedSeries::degree(const Monomial& m) const {
  if (m.size() != weights_.size()) fail(ErrorCode::dimension_mismatch, "monomial has wrong number of variables");
  int deg = 0;
  for (std::size_t i = 0; i < m.size(); ++i) deg += m[i] * weights_[i];
  return deg;
}

Rational GradedSeries::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedSeries::constant_term() const { return coefficient(Monomial(weights_.size(), 0)); }

void GradedSeries::add_term(const Monomial& m, const Rational& c) {
  if (c == 0 || degree(m) > order_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedSeries::require_compatible(const GradedSeries& other) const {
  if (weights_ != other.weights_) fail(ErrorCode::dimension_mismatch, "series live in different variable layouts");
}

GradedSeries GradedSeries::operator+(const GradedSeries& other) const {
  require_compatible(other);
  GradedSeries out(weights_, std::min(order_, other.order_));
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

GradedSeries GradedSeries::operator-() const { return scaled(-1); }

GradedSeries GradedSeries::operator-(const GradedSeries& other) const { return *this + (-other); }

GradedSeries GradedSeries::operator*(const GradedSeries& other) const {
  require_compatible(other);
  GradedSeries out(weights_, std::min(order_, other.order_));
  Monomial m(weights_.size());
  for (const auto& [m1, c1] : terms_) {
    const int d1 = degree(m1);
    if (d1 > out.order_) continue;
    for (const auto& [m2, c2] : other.terms_) {
      if (d1 + degree(m2) > out.order_) continue;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

GradedSeries GradedSeries::scaled(const Rational& factor) const {
  GradedSeries out(weights_, order_);
  if (factor == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * factor);
  return out;
}

GradedSeries GradedSeries::homogeneous_part(int deg) const {
  GradedSeries out(weights_, order_);
  for (const auto& [m, c] : terms_) {
    if (degree(m) == deg) out.terms_.emplace(m, c);
  }
  return out;
}

GradedSeries GradedSeries::truncated(int order) const {
  GradedSeries out(weights_, std::min(order, order_));
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

GradedSeries GradedSeries::inverse() const {
  const Rational c0 = constant_term();
  if (c0 == 0) fail(ErrorCode::invalid_argument, "only units (nonzero constant term) are invertible");
  // x = c0 (1 + u) with u of positive degree; x^{-1} = c0^{-1} sum (-u)^m.
  // u has degree >= 1 so m <= order terms suffice.
  const GradedSeries one = constant(weights_, order_, 1);
  const GradedSeries minus_u = one - scaled(1 / c0);
  GradedSeries result = one;
  GradedSeries power = one;
  for (int m = 1; m <= order_; ++m) {
    power = power * minus_u;
    if (power.is_zero()) break;
    result = result + power;
  }
  return result.scaled(1 / c0);
}

GradedSeries GradedSeries::embedded(const std::vector<int>& weights) const {
  if (weights.size() < weights_.size() || !std::equal(weights_.begin(), weights_.end(), weights.begin())) {
    fail(ErrorCode::dimension_mismatch, "target layout must extend the source layout");
  }
  GradedSeries out(weights, order_);
  for (const auto& [m, c] : terms_) {
    Monomial wide(m);
    wide.resize(weights.size(), 0);
    out.terms_.emplace(std::move(wide), c);
  }
  return out;
}

std::string GradedSeries::to_string(const std::vector<std::string>& names) const {
  if (names.size() != weights_.size()) fail(ErrorCode::dimension_mismatch, "need one name per variable");
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [&](const auto& x, const auto& y) { return degree(x.first) < degree(y.first); });
  if (sorted.empty()) return "0/1";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Rational mag = c;
    if (first) {
      if (c < 0) {
        out += "-";
        mag = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) mag = -c;
    }
    first = false;
    out += modeta::to_string(mag);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      out += "*" + names[i];
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

GradedSeries exp_series(const GradedSeries& x) {
  if (x.constant_term() != 0) fail(ErrorCode::invalid_argument, "exp needs a series without constant term");
  GradedSeries result = GradedSeries::constant(x.weights(), x.order(), 1);
  GradedSeries power = result;
  for (int m = 1; m <= x.order(); ++m) {
    power = (power * x).scaled(Rational(1, m));
    if (power.is_zero()) break;
    result = result + power;
  }
  return result;
}

GradedSeries log_series(const GradedSeries& x) {
  if (x.constant_term() != 1) fail(ErrorCode::invalid_argument, "log needs a series with constant term 1");
  const GradedSeries u = x - GradedSeries::constant(x.weights(), x.order(), 1);
  GradedSeries result(x.weights(), x.order());
  GradedSeries power = GradedSeries::constant(x.weights(), x.order(), 1);
  for (int m = 1; m <= x.order(); ++m) {
    power = power * u;
    if (power.is_zero()) break;
    result = result + power.scaled(Rational(m % 2 ? 1 : -1, m));
  }
  return result;
}

GradedSeries substitute(const GradedSeries& poly, std::span<const GradedSeries> values, int order) {
  if (values.size() != poly.weights().size()) fail(ErrorCode::dimension_mismatch, "need one value per variable");
  if (values.empty()) fail(ErrorCode::invalid_argument, "substitution needs at least one variable");
  const auto& layout = values.front().weights();
  for (const auto& v : values) {
    if (v.weights() != layout) fail(ErrorCode::dimension_mismatch, "substituted values must share a layout");
  }
  GradedSeries result(layout, order);
  for (const auto& [m, c] : poly.terms()) {
    GradedSeries term = GradedSeries::constant(layout, order, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (int e = 0; e < m[i]; ++e) term = term * values[i].truncated(order);
    }
    result = result + term;
  }
  return result;
}

std::vector<int> characteristic_weights(int pontryagin_count) {
  if (pontryagin_count < 0) fail(ErrorCode::invalid_argument, "negative number of Pontryagin classes");
  std::vector<int> w{2};
  for (int i = 1; i <= pontryagin_count; ++i) w.push_back(4 * i);
  return w;
}

std::vector<std::string> characteristic_names(int pontryagin_count) {
  std::vector<std::string> names{"d"};
  for (int i = 1; i <= pontryagin_count; ++i) names.push_back("p" + std::to_string(i));
  return names;
}

Monomial characteristic_monomial(int pontryagin_count, int d_power, const std::vector<int>& p_powers) {
  if (static_cast<int>(p_powers.size()) > pontryagin_count) {
    fail(ErrorCode::dimension_mismatch, "more Pontryagin exponents than classes");
  }
  Monomial m(static_cast<std::size_t>(pontryagin_count) + 1, 0);
  m[0] = d_power;
  std::copy(p_powers.begin(), p_powers.end(), m.begin() + 1);
  return m;
}

namespace {

Rational factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

// sinh(scale*d/2)/d = sum_j scale^{2j+1} d^{2j} / (2^{2j+1} (2j+1)!).
GradedSeries sinh_over_d(const Rational& scale, int order, int pontryagin_count) {
  GradedSeries s(characteristic_weights(pontryagin_count), order);
  Rational scale_pow = scale;
  Rational two_pow = 2;
  for (int j = 0; 4 * j <= order; ++j) {
    s.add_term(characteristic_monomial(pontryagin_count, 2 * j), scale_pow / (two_pow * factorial(2 * j + 1)));
    scale_pow *= scale * scale;
    two_pow *= 4;
  }
  return s;
}

}  // namespace

GradedSeries sinh_series(const Rational& scale, int order, int pontryagin_count) {
  GradedSeries d = GradedSeries::variable(characteristic_weights(pontryagin_count), order, 0);
  return (d * sinh_over_d(scale, order, pontryagin_count)).truncated(order);
}

GradedSeries sinh_ratio(int ell, int order, int pontryagin_count) {
  if (ell < 1) fail(ErrorCode::invalid_argument, "sinh ratio needs ell >= 1");
  // Both factors are units (constant terms 1/2 and ell/2), so the quotient
  // of the d-divided series is a well defined power series.
  return sinh_over_d(1, order, pontryagin_count) * sinh_over_d(ell, order, pontryagin_count).inverse();
}

std::vector<Rational> ahat_characteristic_coefficients(int n) {
  // sinh(sqrt(z)/2)/(sqrt(z)/2) = sum_j z^j / (4^j (2j+1)!), then invert.
  GradedSeries s({1}, n);
  Rational four_pow = 1;
  for (int j = 0; j <= n; ++j) {
    s.add_term({j}, 1 / (four_pow * factorial(2 * j + 1)));
    four_pow *= 4;
  }
  GradedSeries q = s.inverse();
  std::vector<Rational> b;
  for (int j = 0; j <= n; ++j) b.push_back(q.coefficient({j}));
  return b;
}

GradedSeries AhatTable::total(int order) const {
  GradedSeries sum = polys_.front().truncated(order);
  for (std::size_t i = 1; i < polys_.size(); ++i) sum = sum + polys_[i].truncated(order);
  return sum;
}

AhatTable ahat_table(int n) {
  if (n < 0) fail(ErrorCode::invalid_argument, "A-hat table index must be nonnegative");
  const auto weights = characteristic_weights(n);
  const int order = 4 * n;

  // log Q(z) = sum_k a_k z^k, so log prod_j Q(x_j^2) = sum_k a_k s_k with
  // s_k the k-th power sum of the x_j^2.
  GradedSeries q({1}, n);
  const auto b = ahat_characteristic_coefficients(n);
  for (int j = 0; j <= n; ++j) q.add_term({j}, b[static_cast<std::size_t>(j)]);
  const GradedSeries log_q = log_series(q);

  // Newton: s_k = sum_{i=1}^{k-1} (-1)^{i-1} p_i s_{k-i} + (-1)^{k-1} k p_k,
  // where p_i is the i-th elementary symmetric function of the x_j^2.
  std::vector<GradedSeries> power_sums;
  power_sums.emplace_back(weights, order);  // s_0 unused
  for (int k = 1; k <= n; ++k) {
    GradedSeries sk = GradedSeries::variable(weights, order, k).scaled(k % 2 ? k : -k);
    for (int i = 1; i < k; ++i) {
      GradedSeries term = GradedSeries::variable(weights, order, i) * power_sums[static_cast<std::size_t>(k - i)];
      sk = sk + term.scaled(i % 2 ? 1 : -1);
    }
    power_sums.push_back(std::move(sk));
  }

  GradedSeries log_total(weights, order);
  for (int k = 1; k <= n; ++k) {
    log_total = log_total + power_sums[static_cast<std::size_t>(k)].scaled(log_q.coefficient({k}));
  }
  const GradedSeries total = exp_series(log_total);

  std::vector<GradedSeries> polys;
  for (int i = 0; i <= n; ++i) polys.push_back(total.homogeneous_part(4 * i));
  return AhatTable(std::move(polys));
}

}  // namespace modeta
