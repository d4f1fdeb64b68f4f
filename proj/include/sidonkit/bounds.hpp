#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sidonkit/group.hpp"

namespace sidonkit {

struct BoundEntry {
    std::string name;
    std::uint64_t value = 0;
    bool applicable = false;
    // Which maximum the entry bounds: "M_k", "M_k,g" or "M_k'".
    std::string bounds;
    std::map<std::string, std::string> inputs;
};

struct BoundReport {
    std::uint64_t order = 0;
    unsigned k = 2;
    std::uint64_t g = 1;
    std::vector<BoundEntry> entries;

    const BoundEntry* find(const std::string& name) const;
    // Least applicable value among entries bounding `what`.
    std::optional<std::uint64_t> best(const std::string& what) const;
};

// Every abelian subgroup, by closing cyclic subgroups under adjoining
// commuting elements. Exhaustive; intended for |G| <= 64.
std::vector<ElementSet> abelian_subgroups(const FiniteGroup& g);

// Largest sum x_1 + ... + x_c of nonnegative integers with x_1 <= 1 and
// sum of squares <= capacity.
std::uint64_t coset_square_bound(std::uint64_t cosets, std::uint64_t capacity);

BoundReport upper_bound_report(const FiniteGroup& g, unsigned k, std::uint64_t multiplicity = 1,
                               const std::optional<std::vector<ElementSet>>& known_subgroups = std::nullopt);

} // namespace sidonkit
