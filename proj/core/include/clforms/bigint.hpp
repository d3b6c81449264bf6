#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace clforms {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt ipow(const BigInt& base, std::uint64_t exponent);
BigInt ipow(std::uint64_t base, std::uint64_t exponent);

/// Exact power with a possibly negative exponent.
Rational rpow(std::uint64_t base, std::int64_t exponent);

/// n choose 2 for possibly small n; returns 0 for n < 2.
std::uint64_t choose2(std::int64_t n);

std::string to_decimal(const BigInt& value);
/// "p" for integers, "p/q" otherwise.
std::string to_decimal(const Rational& value);

bool is_integer(const Rational& value);

/// Throws NonIntegerResult when value is not an integer.
BigInt require_integer(const Rational& value, const std::string& what);

/// Checked conversion; throws CapExceeded when the value does not fit.
std::uint64_t to_u64(const BigInt& value, const std::string& what);

}  // namespace clforms
