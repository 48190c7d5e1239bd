#pragma once

// Spin^c characteristic numbers of 4-manifolds and the map to the Pin+
// cobordism group Z/16.

#include <cstdint>

#include "modeta/lattice.hpp"

namespace modeta {

/// The unresolved sign in beta. Every beta-dependent computation takes it
/// explicitly; nothing in the library picks a default.
enum class Epsilon : int { plus = 1, minus = -1 };

inline int sign_of(Epsilon e) noexcept { return static_cast<int>(e); }
Epsilon epsilon_from_int(int value);  // accepts ±1 only

/// Coordinates of a class in the spin^c cobordism group Z^2:
/// (<d^2,[B]>, ind(B,d)) with 8 ind = d^2 - sign.
class SpincClass {
 public:
  /// Throws internal if (d_squared - signature) is not divisible by 8.
  static SpincClass from_numbers(std::int64_t d_squared, std::int64_t signature);

  std::int64_t d_squared() const noexcept { return d_squared_; }
  std::int64_t index() const noexcept { return index_; }
  /// d^2 - 8 ind.
  std::int64_t signature() const noexcept { return d_squared_ - 8 * index_; }

  friend bool operator==(const SpincClass&, const SpincClass&) = default;
  SpincClass operator+(const SpincClass& other) const;

 private:
  SpincClass(std::int64_t d_squared, std::int64_t index) : d_squared_(d_squared), index_(index) {}
  std::int64_t d_squared_;
  std::int64_t index_;
};

/// Element of Z/16 = Pin+ bordism in dimension 4, generated by RP^4.
class PinPlusClass {
 public:
  explicit PinPlusClass(std::int64_t value);

  int value() const noexcept { return value_; }
  PinPlusClass negated() const { return PinPlusClass(-value_); }
  /// Representative of {±value} in {0,...,8}.
  int up_to_sign() const noexcept { return value_ <= 8 ? value_ : 16 - value_; }
  bool equal_up_to_sign(const PinPlusClass& other) const noexcept { return up_to_sign() == other.up_to_sign(); }

  PinPlusClass operator+(const PinPlusClass& other) const { return PinPlusClass(value_ + other.value_); }
  friend bool operator==(const PinPlusClass&, const PinPlusClass&) = default;

 private:
  int value_;
};

/// Requires d characteristic (not necessarily primitive).
SpincClass spinc_class(const IntersectionForm& form, const CohomologyClass& d);

/// (d^2 + 4 eps ind) mod 16; the homomorphism Z^2 -> Z/16 in coordinates.
PinPlusClass beta_of_class(const SpincClass& cls, Epsilon eps);

/// beta(B, d) for a primitive characteristic d. Non-characteristic and
/// non-primitive classes fail with distinct error codes.
PinPlusClass beta(const IntersectionForm& form, const CohomologyClass& d, Epsilon eps);

}  // namespace modeta
