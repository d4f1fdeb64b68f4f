#include "sidonkit/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sidonkit {

std::uint64_t Rng::below(std::uint64_t n)
{
    if (n == 0) throw std::invalid_argument("Rng::below: empty range");
    // reject the top partial block so every residue is equally likely
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % n;
}

std::vector<std::uint32_t> Rng::sample(std::uint32_t n, std::uint32_t k)
{
    if (k > n) throw std::invalid_argument("Rng::sample: k > n");
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0u);
    // partial Fisher-Yates
    for (std::uint32_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::uint32_t>(below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace sidonkit
