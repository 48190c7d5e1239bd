#pragma once

// Reference computations for the tests, written independently of the
// library's algorithms.

#include <algorithm>
#include <map>
#include <vector>

#include "modeta/rational.hpp"

namespace oracle {

using modeta::BigInt;
using modeta::Rational;

inline Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// B_0..B_m from sum_{j<=m} C(m+1,j) B_j = 0.
inline std::vector<Rational> bernoulli(int m) {
  std::vector<Rational> b(static_cast<std::size_t>(m + 1), 0);
  b[0] = 1;
  for (int n = 1; n <= m; ++n) {
    Rational s = 0;
    Rational binom = 1;  // C(n+1, j)
    for (int j = 0; j < n; ++j) {
      s += binom * b[static_cast<std::size_t>(j)];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(n)] = -s / (n + 1);
  }
  return b;
}

// Q(z) = sum b_j z^j with x / sinh x = sum (2 - 2^{2j}) B_{2j} x^{2j} / (2j)!, x = sqrt(z)/2.
inline std::vector<Rational> q_coefficients(int n) {
  const auto bern = bernoulli(2 * n);
  std::vector<Rational> out;
  Rational four = 1;
  for (int j = 0; j <= n; ++j) {
    const Rational two_pow = Rational(BigInt(1) << (2 * j));
    out.push_back((2 - two_pow) * bern[static_cast<std::size_t>(2 * j)] / (factorial(2 * j) * four));
    four *= 4;
  }
  return out;
}

using Poly = std::map<std::vector<int>, Rational>;  // polynomial in y_1..y_n

inline Poly multiply(const Poly& x, const Poly& y) {
  Poly out;
  for (const auto& [m1, c1] : x)
    for (const auto& [m2, c2] : y) {
      std::vector<int> m(m1.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = m1[i] + m2[i];
      out[m] += c1 * c2;
    }
  return out;
}

inline Poly elementary(int i, int n) {
  Poly out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != i) continue;
    std::vector<int> m(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(j)] = (mask >> j) & 1u;
    out[m] += 1;
  }
  return out;
}

inline void partitions(int k, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(k, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions(k - p, p, current, out);
    current.pop_back();
  }
}

// A-hat_k as {exponents of p_1..p_k : coefficient}, solved from
// prod_j Q(y_j) = sum_lambda (prod b_{lambda_i}) m_lambda and p_i = e_i(y).
inline std::map<std::vector<int>, Rational> ahat_oracle(int k) {
  const auto b = q_coefficients(k);
  std::vector<std::vector<int>> parts;
  std::vector<int> scratch;
  partitions(k, k, scratch, parts);
  const std::size_t size = parts.size();
  // Column mu: e_mu expanded; row lambda: coefficient of y^lambda (padded).
  std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size + 1, 0));
  for (std::size_t col = 0; col < size; ++col) {
    Poly e{{std::vector<int>(static_cast<std::size_t>(k), 0), 1}};
    for (int part : parts[col]) e = multiply(e, elementary(part, k));
    for (std::size_t row = 0; row < size; ++row) {
      std::vector<int> mono(static_cast<std::size_t>(k), 0);
      for (std::size_t i = 0; i < parts[row].size(); ++i) mono[i] = parts[row][i];
      auto it = e.find(mono);
      if (it != e.end()) a[row][col] = it->second;
    }
  }
  for (std::size_t row = 0; row < size; ++row) {
    Rational target = 1;
    for (int part : parts[row]) target *= b[static_cast<std::size_t>(part)];
    a[row][size] = target;
  }
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    for (std::size_t row = 0; row < size; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col] / a[col][col];
      for (std::size_t j = col; j <= size; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::map<std::vector<int>, Rational> out;
  for (std::size_t col = 0; col < size; ++col) {
    std::vector<int> exps(static_cast<std::size_t>(k), 0);
    for (int part : parts[col]) ++exps[static_cast<std::size_t>(part - 1)];
    const Rational c = a[col][size] / a[col][col];
    if (c != 0) out[exps] = c;
  }
  return out;
}

}  // namespace oracle
