#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sidonkit {

// Exact integer used for every count that can outgrow 64 bits.
using BigInt = boost::multiprecision::cpp_int;
// Exact rational; always kept in lowest terms by the backend.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& value);
// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt power(const BigInt& base, unsigned exponent);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

// floor(x^(1/k)) for x >= 0, k >= 1, computed exactly.
std::uint64_t integer_root(std::uint64_t x, unsigned k);
// True when x is a perfect k-th power.
bool is_perfect_power(std::uint64_t x, unsigned k);

} // namespace sidonkit
