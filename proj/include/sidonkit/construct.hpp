#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sidonkit/bigint.hpp"
#include "sidonkit/group.hpp"
#include "sidonkit/sidon.hpp"

namespace sidonkit {

class UndirectedGraph;

// {(alpha, alpha*pi) : alpha in base} inside G x G.
struct PairSet {
    FiniteGroup factor;          // G
    FiniteGroup group;           // G x G
    Element pi = 0;
    std::vector<Element> base;   // alpha values, sorted
    ElementSet members;          // flattened pairs in G x G
    std::uint64_t claimed_g = 0;
    // max over mu of #{alpha in base : alpha pi alpha^-1 = mu}
    std::uint64_t recipe_g = 0;
};

Element pair_element(const FiniteGroup& factor, Element first, Element second);

PairSet conjugacy_recipe(const FiniteGroup& g, Element pi, const ElementSet& base);
PairSet sn_cross(std::uint32_t n, bool full, bool alternating);
// base = class of a, pi = a, claimed_g = |G| / |class|.
PairSet class_recipe(const FiniteGroup& g, Element a);

class SquareMatrix01 {
public:
    explicit SquareMatrix01(std::size_t n = 0) : n_(n), rows_(n, 0) {}
    std::size_t size() const { return n_; }
    bool get(std::size_t i, std::size_t j) const { return (rows_[i] >> j) & 1u; }
    void set(std::size_t i, std::size_t j, bool v = true);
    std::uint64_t row_mask(std::size_t i) const { return rows_[i]; }
    std::size_t row_sum(std::size_t i) const;
    std::size_t column_sum(std::size_t j) const;
    // common row and column sum, if the matrix is regular
    std::optional<std::size_t> regular_sum() const;

private:
    std::size_t n_;
    std::vector<std::uint64_t> rows_;
};

// M[x][y] = 1 iff x^-1 y is in the set.
SquareMatrix01 cayley_matrix(const ElementSet& a);

inline constexpr std::size_t kPermanentCap = 30;
BigInt ryser_permanent(const SquareMatrix01& m);
// rowsum^n * n! / n^n
Rational ef_bound(std::uint32_t n, std::uint32_t rowsum);

// All permutations pi of G's elements with pi(x) in xA; point i+1 is element i.
std::vector<Permutation> permanent_lift(const ElementSet& a, std::uint64_t max_outputs = 10'000'000);

struct HamiltonLift {
    std::vector<Permutation> permutations;
    // orientation[e] is true when edge (u, v), u < v, points u -> v
    std::vector<bool> orientation;
    std::uint64_t hamilton_cycles = 0;
};
HamiltonLift hamilton_lift(const UndirectedGraph& graph, unsigned k, std::uint64_t seed,
                           std::uint64_t max_nodes = default_max_nodes());

enum class SidonKind { First, Second };

struct HypergraphProfile {
    std::uint32_t vertex_count = 0;
    std::map<unsigned, std::uint64_t> edge_counts;   // r -> e_r
    std::map<unsigned, std::uint64_t> form_counts;   // equation form -> ordered solutions
    std::vector<Rational> f;                         // f[k] for k = 0..n
    std::uint32_t k_star = 0;
    Rational gain;                                   // k* - f(k*)
    std::uint64_t target = 0;                        // ceil(gain)
};

struct ProbabilisticResult {
    ElementSet set;
    HypergraphProfile profile;
    std::uint64_t attempts = 0;
    bool budget_exhausted = false;
};

// First kind: vertices are the base set B, edges from alpha beta = gamma delta.
// Second kind: vertices are all of G, edges from cyclic alpha beta^-1 gamma delta^-1 = 1.
ProbabilisticResult probabilistic_sidon(const FiniteGroup& g, SidonKind kind, const std::optional<ElementSet>& base,
                                        std::uint64_t seed, std::uint64_t max_attempts = 1000);
HypergraphProfile hypergraph_profile(const FiniteGroup& g, SidonKind kind, const std::optional<ElementSet>& base);
// pairwise distinct squares and pairwise non-commuting
bool is_valid_first_kind_base(const ElementSet& b);

// One generator per cyclic subgroup of the n-cycles (odd n) or of the
// (n-1)-cycles fixing n (even n), inside A:n.
ElementSet anticommuting_base(std::uint32_t n);

std::vector<std::vector<std::uint32_t>> hash_shift_family(std::uint32_t t, std::uint32_t v);
// C(t,2) * q^(n - (v-2) n / (t-1)); needs (t-1) | n
Rational hash_code_bound(std::uint32_t t, std::uint32_t v, std::uint32_t q, std::uint32_t n);

} // namespace sidonkit
