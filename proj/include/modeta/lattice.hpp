#pragma once

// Integral intersection forms of closed simply connected 4-manifolds and
// classes in their second cohomology, in a fixed basis.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modeta {

/// How a form was built. Only informative: no computation branches on it.
enum class FormOrigin { raw, diagonal, even, block_sum };

class CohomologyClass {
 public:
  CohomologyClass() = default;
  explicit CohomologyClass(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  CohomologyClass(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  static CohomologyClass zero(int rank) { return CohomologyClass(std::vector<std::int64_t>(rank, 0)); }

  int rank() const noexcept { return static_cast<int>(coords_.size()); }
  std::int64_t operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  std::span<const std::int64_t> coords() const noexcept { return coords_; }
  bool is_zero() const noexcept;

  /// Comma separated, e.g. "3,1,1".
  std::string to_string() const;

  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
  friend auto operator<=>(const CohomologyClass&, const CohomologyClass&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// Symmetric unimodular integer matrix. Immutable; signature, parity and the
/// diagonal block structure are computed once at construction.
class IntersectionForm {
 public:
  /// diag(+1)^a ⊕ diag(-1)^b ⊕ H^c with H = [[0,1],[1,0]]. a=b=c=0 gives the
  /// rank-0 form of S^4.
  static IntersectionForm connected_sum(int a, int b, int c);
  static IntersectionForm diagonal(int a, int b) { return connected_sum(a, b, 0); }
  static IntersectionForm even(int c) { return connected_sum(0, 0, c); }

  /// Validates symmetry and det = ±1.
  static IntersectionForm from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  int rank() const noexcept { return rank_; }
  std::int64_t entry(int i, int j) const {
    return matrix_[static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(j)];
  }
  FormOrigin origin() const noexcept { return origin_; }
  int signature() const noexcept { return signature_; }
  int determinant() const noexcept { return determinant_; }
  /// Even form (all diagonal entries even).
  bool is_spin() const noexcept { return spin_; }

  /// (a, b) when the matrix is literally diag(+1 x a, -1 x b) in this basis.
  std::optional<std::pair<int, int>> diagonal_counts() const noexcept { return diagonal_counts_; }

  /// Orientation reversal: the negated form.
  IntersectionForm reversed() const;

  /// "diagonal(a,b)" / "even(c)" when the matrix has that shape, else rows
  /// "[[..],[..]]". parse_form reads every form back.
  std::string to_string() const;

  friend bool operator==(const IntersectionForm& x, const IntersectionForm& y) {
    return x.rank_ == y.rank_ && x.matrix_ == y.matrix_;
  }

 private:
  IntersectionForm(int rank, std::vector<std::int64_t> matrix, FormOrigin origin);

  int rank_ = 0;
  std::vector<std::int64_t> matrix_;
  FormOrigin origin_ = FormOrigin::raw;
  int signature_ = 0;
  int determinant_ = 1;
  bool spin_ = true;
  std::optional<std::pair<int, int>> diagonal_counts_;
};

/// Exact congruence diagonalization over Q. Returns (signature, determinant);
/// works for any symmetric integer matrix, singular or not.
std::pair<int, std::int64_t> inertia_and_determinant(int rank, std::span<const std::int64_t> matrix);

std::int64_t pairing(const IntersectionForm& form, const CohomologyClass& x, const CohomologyClass& y);
inline std::int64_t square(const IntersectionForm& form, const CohomologyClass& x) { return pairing(form, x, x); }

/// The unique v over Z/2 with v.x = x.x mod 2 for every x (the Wu class, w2).
std::vector<std::uint8_t> char_vector_mod2(const IntersectionForm& form);

/// gcd of the coordinates is 1. Throws on the zero class.
bool is_primitive(const CohomologyClass& x);

/// d mod 2 equals the characteristic vector of the form.
bool is_characteristic(const IntersectionForm& form, const CohomologyClass& d);

IntersectionForm block_sum(const IntersectionForm& first, const IntersectionForm& second);
CohomologyClass class_concat(const CohomologyClass& first, const CohomologyClass& second);

/// Applies the change of basis P: returns P^T M P. P must have det ±1.
IntersectionForm change_basis(const IntersectionForm& form, const std::vector<std::vector<std::int64_t>>& basis);

/// Accepted spellings:
///   diagonal(a,b)     a copies of (+1), b copies of (-1)
///   diag(e1,...,en)   diagonal matrix with entries e_i (each ±1)
///   even(c)           c hyperbolic blocks
///   sum(a,b,c)        diagonal(a,b) ⊕ even(c)
///   [[1,0],[0,-1]]    explicit rows (also "1,0;0,-1")
IntersectionForm parse_form(std::string_view text);

/// Parses "3,1,1" (also accepts surrounding parentheses or brackets).
CohomologyClass parse_class(std::string_view text);

}  // namespace modeta
