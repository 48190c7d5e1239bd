#include "modeta/cobordism.hpp"

#include "modeta/error.hpp"
#include "modeta/rational.hpp"

namespace modeta {

Epsilon epsilon_from_int(int value) {
  if (value == 1) return Epsilon::plus;
  if (value == -1) return Epsilon::minus;
  fail(ErrorCode::invalid_argument, "epsilon must be +1 or -1, got " + std::to_string(value));
}

SpincClass SpincClass::from_numbers(std::int64_t d_squared, std::int64_t signature) {
  const std::int64_t diff = d_squared - signature;
  if (diff % 8 != 0) {
    fail(ErrorCode::internal, "d^2 - sign = " + std::to_string(diff) + " is not divisible by 8");
  }
  return SpincClass(d_squared, diff / 8);
}

SpincClass SpincClass::operator+(const SpincClass& other) const {
  return SpincClass(d_squared_ + other.d_squared_, index_ + other.index_);
}

PinPlusClass::PinPlusClass(std::int64_t value) : value_(static_cast<int>(mod_floor(value, 16))) {}

SpincClass spinc_class(const IntersectionForm& form, const CohomologyClass& d) {
  if (!is_characteristic(form, d)) {
    fail(ErrorCode::not_characteristic, "class (" + d.to_string() + ") is not characteristic for " + form.to_string());
  }
  return SpincClass::from_numbers(square(form, d), form.signature());
}

PinPlusClass beta_of_class(const SpincClass& cls, Epsilon eps) {
  return PinPlusClass(cls.d_squared() + 4 * sign_of(eps) * cls.index());
}

PinPlusClass beta(const IntersectionForm& form, const CohomologyClass& d, Epsilon eps) {
  const SpincClass cls = spinc_class(form, d);
  if (d.is_zero() || !is_primitive(d)) fail(ErrorCode::not_primitive, "class (" + d.to_string() + ") is not primitive");
  return beta_of_class(cls, eps);
}

}  // namespace modeta
