#include "clforms/bigint.hpp"

#include "clforms/error.hpp"

namespace clforms {

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

BigInt ipow(std::uint64_t base, std::uint64_t exponent) { return ipow(BigInt(base), exponent); }

Rational rpow(std::uint64_t base, std::int64_t exponent) {
  if (exponent >= 0) return Rational(ipow(base, static_cast<std::uint64_t>(exponent)));
  return Rational(BigInt(1), ipow(base, static_cast<std::uint64_t>(-exponent)));
}

std::uint64_t choose2(std::int64_t n) {
  if (n < 2) return 0;
  return static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::string to_decimal(const Rational& value) {
  if (is_integer(value)) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

BigInt require_integer(const Rational& value, const std::string& what) {
  if (!is_integer(value)) {
    fail(ErrorCode::NonIntegerResult, what + " = " + to_decimal(value) + " is not an integer");
  }
  return boost::multiprecision::numerator(value);
}

std::uint64_t to_u64(const BigInt& value, const std::string& what) {
  if (value < 0 || value > BigInt(std::numeric_limits<std::uint64_t>::max())) {
    fail(ErrorCode::CapExceeded, what + " = " + value.str() + " does not fit in 64 bits");
  }
  return value.convert_to<std::uint64_t>();
}

}  // namespace clforms
