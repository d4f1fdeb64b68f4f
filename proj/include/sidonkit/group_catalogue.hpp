#pragma once

#include <string>
#include <vector>

#include "sidonkit/group.hpp"

namespace sidonkit {

struct CatalogueEntry {
    std::string name; // file stem, e.g. "16_09_Q16"
    FiniteGroup group;
};

// One representative of every isomorphism type of order <= 16 (42 groups),
// as table-backed groups.
std::vector<CatalogueEntry> small_group_catalogue();

// <a, b | a^m = 1, b^n = a^t, b a b^-1 = a^r>, elements a^i b^j at index i*n + j.
FiniteGroup metacyclic_group(std::uint32_t m, std::uint32_t n, std::uint32_t t, std::uint32_t r, std::string label);

// Isomorphism invariants used to tell catalogue entries apart.
std::vector<std::uint64_t> group_invariants(const FiniteGroup& g);

} // namespace sidonkit
