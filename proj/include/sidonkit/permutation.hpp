#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sidonkit {

// Bijection of {0..n-1}, printed 1-indexed. Composition is right to left:
// (a * b)(x) == a(b(x)).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t n);
    // 0-indexed images; throws unless a bijection.
    explicit Permutation(std::vector<std::uint32_t> images);

    static Permutation identity(std::size_t n) { return Permutation(n); }
    // One-line "[2 3 1]" or cycle notation "(1 2 3)(4 5)"; "()" and "e" mean identity.
    // Cycle input needs a degree; 0 infers it from the largest point mentioned.
    static Permutation parse(std::string_view text, std::size_t degree = 0);
    // Lexicographic rank among all permutations of the same degree (degree <= 20).
    static Permutation unrank(std::size_t n, std::uint64_t rank);

    std::size_t size() const { return images_.size(); }
    std::uint32_t operator()(std::uint32_t x) const { return images_[x]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    bool is_identity() const;
    bool is_even() const;
    std::uint64_t order() const;
    // Nontrivial cycles, each starting at its least point, sorted by that point.
    std::vector<std::vector<std::uint32_t>> cycles() const;
    std::uint64_t lex_rank() const;

    std::string to_cycles() const;   // "(1 2 3)", "()" for identity
    std::string to_one_line() const; // "[2 3 1]"

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint32_t> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept;
};

} // namespace sidonkit
