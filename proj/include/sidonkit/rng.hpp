#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace sidonkit {

// Seeded generator with a portable uniform draw. std::uniform_int_distribution
// is implementation defined, so outputs would differ between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    // Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);
    bool coin() { return (engine_() >> 63) != 0; }

    // Uniform k-subset of {0..n-1}, sorted.
    std::vector<std::uint32_t> sample(std::uint32_t n, std::uint32_t k);

private:
    std::mt19937_64 engine_;
};

// splitmix64 finalizer; used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace sidonkit
