#include "modeta/rational.hpp"

#include "modeta/error.hpp"

namespace modeta {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::parse: return "parse";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::not_characteristic: return "not_characteristic";
    case ErrorCode::not_primitive: return "not_primitive";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::unsolvable: return "unsolvable";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

BigInt numerator_of(const Rational& value) {
  return boost::multiprecision::numerator(value);
}

BigInt denominator_of(const Rational& value) {
  return boost::multiprecision::denominator(value);
}

std::string to_string(const Rational& value) {
  return numerator_of(value).str() + "/" + denominator_of(value).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) pos = 1;
  if (pos == text.size()) fail(ErrorCode::parse, "malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      fail(ErrorCode::parse, "malformed rational '" + std::string(whole) + "'");
    }
  }
  BigInt value(std::string(text.substr(pos)));
  return text[0] == '-' ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) fail(ErrorCode::parse, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::int64_t mod_floor(std::int64_t value, std::int64_t modulus) {
  std::int64_t r = value % modulus;
  return r < 0 ? r + modulus : r;
}

}  // namespace modeta
