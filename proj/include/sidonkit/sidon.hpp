#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sidonkit/group.hpp"

namespace sidonkit {

using Word = std::vector<Element>;

using WorkCapExceeded = CapExceeded;

// Defaults come from SIDONKIT_MAX_WORDS / SIDONKIT_MAX_NODES when set.
std::uint64_t default_max_words();
std::uint64_t default_max_nodes();

enum class Property { Sk, SkPrime };
const char* property_name(Property p);

struct VerifyReport {
    Property property = Property::Sk;
    unsigned k = 2;
    bool cyclic = true; // S_k' only
    bool holds = true;
    // Sk: max over mu of the number of k-words with product mu.
    // SkPrime: number of violating 2k-words (saturating).
    std::uint64_t multiplicity = 0;
    // Sk: two distinct words with equal product.
    std::optional<std::pair<Word, Word>> witness_words;
    // SkPrime: alpha_1, beta_1, ..., alpha_k, beta_k.
    std::optional<Word> witness_cycle;
};

VerifyReport check_sk(const ElementSet& a, unsigned k, std::uint64_t max_words = default_max_words());
std::uint64_t sk_multiplicity(const ElementSet& a, unsigned k, std::uint64_t max_words = default_max_words());
VerifyReport check_sk_prime(const ElementSet& a, unsigned k, bool cyclic = true,
                            std::uint64_t max_words = default_max_words());

// Words in the witness index into `perms`.
VerifyReport check_sk(std::span<const Permutation> perms, unsigned k, std::uint64_t max_words = default_max_words());

// Re-check a witness from scratch.
bool witness_is_valid(const FiniteGroup& g, const VerifyReport& r);

struct SearchOptions {
    std::uint64_t max_nodes = default_max_nodes();
    // Stop as soon as a set of this size is found (0 = run to completion).
    std::uint64_t stop_at = 0;
    // Search only sets avoiding the identity (e.g. to seed a loop-free Cayley digraph).
    bool exclude_identity = false;
};

struct SearchResult {
    std::uint64_t value = 0;
    ElementSet witness;
    std::uint64_t nodes = 0;
    bool exact = false;
    bool budget_exhausted = false;
};

SearchResult max_sk(const FiniteGroup& g, unsigned k, std::uint64_t multiplicity = 1, SearchOptions opts = {});
SearchResult max_sk_prime(const FiniteGroup& g, unsigned k, bool cyclic = true, SearchOptions opts = {});

} // namespace sidonkit
