#include "sidonkit/bigint.hpp"

#include <stdexcept>

namespace sidonkit {

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt factorial(unsigned n)
{
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt power(const BigInt& base, unsigned exponent)
{
    return boost::multiprecision::pow(base, exponent);
}

BigInt floor(const Rational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    BigInt q = num / den; // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

BigInt ceil(const Rational& value)
{
    return -floor(-value);
}

namespace {

// Saturating test of r^k <= x.
bool power_at_most(std::uint64_t r, unsigned k, std::uint64_t x)
{
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < k; ++i) {
        acc *= r;
        if (acc > x) return false;
    }
    return true;
}

} // namespace

std::uint64_t integer_root(std::uint64_t x, unsigned k)
{
    if (k == 0) throw std::invalid_argument("integer_root: k must be positive");
    if (k == 1 || x < 2) return x;
    std::uint64_t lo = 1;
    std::uint64_t hi = std::min<std::uint64_t>(x, std::uint64_t{1} << (64 / k + 1));
    while (lo < hi) {
        const std::uint64_t mid = lo + (hi - lo + 1) / 2;
        if (power_at_most(mid, k, x)) lo = mid;
        else hi = mid - 1;
    }
    return lo;
}

bool is_perfect_power(std::uint64_t x, unsigned k)
{
    const std::uint64_t r = integer_root(x, k);
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < k; ++i) acc *= r;
    return acc == x;
}

} // namespace sidonkit
