#include "modeta/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "modeta/error.hpp"
#include "modeta/rational.hpp"

namespace modeta {

bool CohomologyClass::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

std::string CohomologyClass::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out;
}

std::pair<int, std::int64_t> inertia_and_determinant(int rank, std::span<const std::int64_t> matrix) {
  // Lagrange's reduction: symmetric elimination with congruence moves. Every
  // step is a congruence by a determinant-one matrix, so the product of the
  // pivots is the determinant and their signs give the inertia.
  const auto n = static_cast<std::size_t>(rank);
  std::vector<Rational> a(matrix.begin(), matrix.end());
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };

  int positive = 0;
  int negative = 0;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (at(i, i) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == n) {
      // All remaining diagonal entries vanish. If some a_kj != 0, adding
      // row/column j to row/column k makes a_kk = 2 a_kj nonzero.
      std::size_t partner = n;
      for (std::size_t i = k; i < n && partner == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (at(i, j) != 0) {
            pivot = i;
            partner = j;
            break;
          }
        }
      }
      if (partner == n) return {positive - negative, 0};  // remaining block is zero
      for (std::size_t j = 0; j < n; ++j) at(pivot, j) += at(partner, j);
      for (std::size_t i = 0; i < n; ++i) at(i, pivot) += at(i, partner);
    }
    if (pivot != k) {
      // Symmetric swap: determinant changes sign twice.
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, k), at(i, pivot));
    }
    const Rational p = at(k, k);
    det *= p;
    (p > 0 ? positive : negative) += 1;
    // Schur complement; row and column k are left stale and never read again.
    for (std::size_t i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      const Rational factor = at(i, k) / p;
      for (std::size_t j = k + 1; j < n; ++j) at(i, j) -= factor * at(k, j);
    }
  }
  if (denominator_of(det) != 1) fail(ErrorCode::internal, "non-integral determinant of an integer matrix");
  return {positive - negative, static_cast<std::int64_t>(numerator_of(det))};
}

IntersectionForm::IntersectionForm(int rank, std::vector<std::int64_t> matrix, FormOrigin origin)
    : rank_(rank), matrix_(std::move(matrix)), origin_(origin) {
  for (int i = 0; i < rank_; ++i) {
    for (int j = i + 1; j < rank_; ++j) {
      if (entry(i, j) != entry(j, i)) {
        fail(ErrorCode::invalid_argument, "intersection form must be symmetric");
      }
    }
  }
  auto [sig, det] = inertia_and_determinant(rank_, matrix_);
  if (det != 1 && det != -1) {
    fail(ErrorCode::invalid_argument, "intersection form must be unimodular, determinant is " + std::to_string(det));
  }
  signature_ = sig;
  determinant_ = static_cast<int>(det);
  spin_ = true;
  for (int i = 0; i < rank_; ++i) spin_ = spin_ && entry(i, i) % 2 == 0;

  int a = 0;
  bool shaped = true;
  for (int i = 0; i < rank_ && shaped; ++i) {
    for (int j = 0; j < rank_ && shaped; ++j) {
      std::int64_t v = entry(i, j);
      if (i != j) {
        shaped = v == 0;
      } else if (v == 1) {
        shaped = a == i;  // every +1 precedes every -1
        ++a;
      } else {
        shaped = v == -1;
      }
    }
  }
  if (shaped) diagonal_counts_ = std::pair{a, rank_ - a};
}

IntersectionForm IntersectionForm::connected_sum(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) fail(ErrorCode::invalid_argument, "block counts must be nonnegative");
  const int n = a + b + 2 * c;
  std::vector<std::int64_t> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto set = [&](int i, int j, std::int64_t v) { m[static_cast<std::size_t>(i * n + j)] = v; };
  for (int i = 0; i < a; ++i) set(i, i, 1);
  for (int i = a; i < a + b; ++i) set(i, i, -1);
  for (int h = 0; h < c; ++h) {
    int i = a + b + 2 * h;
    set(i, i + 1, 1);
    set(i + 1, i, 1);
  }
  FormOrigin origin = FormOrigin::block_sum;
  if (c == 0) origin = FormOrigin::diagonal;
  else if (a == 0 && b == 0) origin = FormOrigin::even;
  return IntersectionForm(n, std::move(m), origin);
}

IntersectionForm IntersectionForm::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::int64_t> m;
  m.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::invalid_argument, "intersection form must be square");
    m.insert(m.end(), row.begin(), row.end());
  }
  return IntersectionForm(n, std::move(m), FormOrigin::raw);
}

IntersectionForm IntersectionForm::reversed() const {
  std::vector<std::int64_t> m(matrix_.size());
  std::transform(matrix_.begin(), matrix_.end(), m.begin(), [](std::int64_t v) { return -v; });
  return IntersectionForm(rank_, std::move(m), origin_);
}

std::string IntersectionForm::to_string() const {
  if (diagonal_counts_) {
    return "diagonal(" + std::to_string(diagonal_counts_->first) + "," + std::to_string(diagonal_counts_->second) + ")";
  }
  if (rank_ % 2 == 0 && *this == even(rank_ / 2)) return "even(" + std::to_string(rank_ / 2) + ")";
  std::string out = "[";
  for (int i = 0; i < rank_; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < rank_; ++j) {
      if (j) out += ',';
      out += std::to_string(entry(i, j));
    }
    out += ']';
  }
  return out + "]";
}

std::int64_t pairing(const IntersectionForm& form, const CohomologyClass& x, const CohomologyClass& y) {
  const int n = form.rank();
  if (x.rank() != n || y.rank() != n) {
    fail(ErrorCode::dimension_mismatch, "class of length " + std::to_string(x.rank() != n ? x.rank() : y.rank()) +
                                            " does not match form of rank " + std::to_string(n));
  }
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    std::int64_t row = 0;
    for (int j = 0; j < n; ++j) row += form.entry(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

std::vector<std::uint8_t> char_vector_mod2(const IntersectionForm& form) {
  // Solve M v = diag(M) over Z/2; M is invertible mod 2 because det = ±1.
  const int n = form.rank();
  std::vector<std::vector<std::uint8_t>> aug(static_cast<std::size_t>(n), std::vector<std::uint8_t>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = static_cast<std::uint8_t>(mod_floor(form.entry(i, j), 2));
    aug[i][n] = static_cast<std::uint8_t>(mod_floor(form.entry(i, i), 2));
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    if (pivot == n) fail(ErrorCode::internal, "form is singular mod 2");
    std::swap(aug[col], aug[pivot]);
    for (int i = 0; i < n; ++i) {
      if (i != col && aug[i][col]) {
        for (int j = col; j <= n; ++j) aug[i][j] ^= aug[col][j];
      }
    }
  }
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = aug[i][n];
  return v;
}

bool is_primitive(const CohomologyClass& x) {
  if (x.is_zero()) fail(ErrorCode::invalid_argument, "primitivity is undefined for the zero class");
  std::int64_t g = 0;
  for (auto c : x.coords()) g = std::gcd(g, c);
  return g == 1;
}

bool is_characteristic(const IntersectionForm& form, const CohomologyClass& d) {
  if (d.rank() != form.rank()) {
    fail(ErrorCode::dimension_mismatch, "class of length " + std::to_string(d.rank()) +
                                            " does not match form of rank " + std::to_string(form.rank()));
  }
  auto w = char_vector_mod2(form);
  for (int i = 0; i < d.rank(); ++i) {
    if (mod_floor(d[i], 2) != w[i]) return false;
  }
  return true;
}

IntersectionForm block_sum(const IntersectionForm& first, const IntersectionForm& second) {
  const int n1 = first.rank();
  const int n = n1 + second.rank();
  std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(n), std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n1; ++j) rows[i][j] = first.entry(i, j);
  for (int i = n1; i < n; ++i)
    for (int j = n1; j < n; ++j) rows[i][j] = second.entry(i - n1, j - n1);
  return IntersectionForm::from_rows(rows);
}

CohomologyClass class_concat(const CohomologyClass& first, const CohomologyClass& second) {
  std::vector<std::int64_t> c(first.coords().begin(), first.coords().end());
  c.insert(c.end(), second.coords().begin(), second.coords().end());
  return CohomologyClass(std::move(c));
}

IntersectionForm change_basis(const IntersectionForm& form, const std::vector<std::vector<std::int64_t>>& basis) {
  const int n = form.rank();
  if (static_cast<int>(basis.size()) != n) fail(ErrorCode::dimension_mismatch, "basis matrix has wrong size");
  for (const auto& row : basis) {
    if (static_cast<int>(row.size()) != n) fail(ErrorCode::dimension_mismatch, "basis matrix has wrong size");
  }
  std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(n), std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::int64_t s = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += basis[k][i] * form.entry(k, l) * basis[l][j];
      out[i][j] = s;
    }
  }
  return IntersectionForm::from_rows(out);
}

namespace {

std::string strip(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
  }
  return out;
}

std::vector<std::int64_t> parse_integers(std::string_view text, std::string_view whole) {
  std::vector<std::int64_t> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    Rational v = parse_rational(token);
    if (denominator_of(v) != 1) fail(ErrorCode::parse, "expected integers in '" + std::string(whole) + "'");
    auto num = numerator_of(v);
    if (num > INT32_MAX || num < INT32_MIN) fail(ErrorCode::parse, "integer out of range in '" + std::string(whole) + "'");
    out.push_back(static_cast<std::int64_t>(num));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string_view unwrap(std::string_view s, char open, char close) {
  if (s.size() >= 2 && s.front() == open && s.back() == close) return s.substr(1, s.size() - 2);
  return s;
}

int count_arg(std::int64_t v, std::string_view whole) {
  if (v < 0 || v > 1024) fail(ErrorCode::parse, "block count out of range in '" + std::string(whole) + "'");
  return static_cast<int>(v);
}

}  // namespace

IntersectionForm parse_form(std::string_view text) {
  const std::string s = strip(text);
  auto call = [&](std::string_view name) -> std::optional<std::vector<std::int64_t>> {
    if (s.size() > name.size() + 1 && s.compare(0, name.size(), name) == 0 && s[name.size()] == '(' && s.back() == ')') {
      return parse_integers(std::string_view(s).substr(name.size() + 1, s.size() - name.size() - 2), s);
    }
    return std::nullopt;
  };
  if (auto args = call("diagonal")) {
    if (args->size() != 2) fail(ErrorCode::parse, "diagonal(a,b) takes two counts");
    return IntersectionForm::diagonal(count_arg((*args)[0], s), count_arg((*args)[1], s));
  }
  if (auto args = call("even")) {
    if (args->size() != 1) fail(ErrorCode::parse, "even(c) takes one count");
    return IntersectionForm::even(count_arg((*args)[0], s));
  }
  if (auto args = call("sum")) {
    if (args->size() != 3) fail(ErrorCode::parse, "sum(a,b,c) takes three counts");
    return IntersectionForm::connected_sum(count_arg((*args)[0], s), count_arg((*args)[1], s),
                                           count_arg((*args)[2], s));
  }
  if (auto args = call("diag")) {
    const auto n = args->size();
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = (*args)[i];
    return IntersectionForm::from_rows(rows);
  }
  if (s.empty()) fail(ErrorCode::parse, "empty form");

  // Explicit rows: "[[a,b],[c,d]]" or "a,b;c,d".
  std::vector<std::vector<std::int64_t>> rows;
  std::string_view body = s;
  if (body.size() >= 4 && body.substr(0, 2) == "[[") {
    body = unwrap(body, '[', ']');
    std::size_t pos = 0;
    while (pos < body.size()) {
      if (body[pos] == ',') {
        ++pos;
        continue;
      }
      if (body[pos] != '[') fail(ErrorCode::parse, "malformed matrix '" + s + "'");
      auto end = body.find(']', pos);
      if (end == std::string_view::npos) fail(ErrorCode::parse, "malformed matrix '" + s + "'");
      rows.push_back(parse_integers(body.substr(pos + 1, end - pos - 1), s));
      pos = end + 1;
    }
  } else if (body == "[]" || body == "empty") {
    return IntersectionForm::connected_sum(0, 0, 0);
  } else {
    std::size_t start = 0;
    while (true) {
      auto semi = body.find(';', start);
      rows.push_back(parse_integers(body.substr(start, semi == std::string_view::npos ? std::string_view::npos
                                                                                       : semi - start),
                                    s));
      if (semi == std::string_view::npos) break;
      start = semi + 1;
    }
  }
  return IntersectionForm::from_rows(rows);
}

CohomologyClass parse_class(std::string_view text) {
  const std::string s = strip(text);
  std::string_view body = unwrap(unwrap(s, '(', ')'), '[', ']');
  return CohomologyClass(parse_integers(body, s));
}

}  // namespace modeta
