#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sidonkit/bigint.hpp"
#include "sidonkit/group.hpp"
#include "sidonkit/permutation.hpp"

namespace sidonkit {

using Vertex = std::uint32_t;
using Path = std::vector<Vertex>;

// Loop-free directed graph without parallel arcs; opposite arcs are fine.
class Digraph {
public:
    explicit Digraph(std::size_t n = 0) : out_(n), in_(n) {}

    std::size_t size() const { return out_.size(); }
    std::size_t arc_count() const { return arcs_; }
    // Throws on loops, duplicates and out-of-range endpoints.
    void add_arc(Vertex u, Vertex v);
    bool has_arc(Vertex u, Vertex v) const;
    const std::vector<Vertex>& out(Vertex u) const { return out_[u]; }
    const std::vector<Vertex>& in(Vertex v) const { return in_[v]; }
    std::vector<std::pair<Vertex, Vertex>> arcs() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);

private:
    std::vector<std::vector<Vertex>> out_, in_;
    std::vector<std::string> labels_;
    std::size_t arcs_ = 0;
};

class UndirectedGraph {
public:
    explicit UndirectedGraph(std::size_t n = 0) : adj_(n) {}
    std::size_t size() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_; }
    void add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex u) const { return adj_[u]; }
    // (u, v) with u < v, sorted
    std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edges_ = 0;
};

// named graphs
UndirectedGraph petersen_graph();
UndirectedGraph dodecahedron_graph();
UndirectedGraph cycle_graph(std::size_t n);
UndirectedGraph path_graph(std::size_t n);
UndirectedGraph complete_bipartite_graph(std::size_t a, std::size_t b);
Digraph directed_cycle(std::size_t n);
Digraph bidirected_complete(std::size_t n);
// X_1..X_m are vertices 0..m-1, Y_1..Y_m are m..2m-1
Digraph bidirected_complete_bipartite(std::size_t m);
// source 0, sink 1, two internally disjoint directed paths of length l
Digraph cll_graph(std::size_t l);

Digraph cayley_digraph(const ElementSet& a);
// (x, 0) is vertex x, (x, 1) is vertex |G| + x; edges {(x,0), (x b,1)}
UndirectedGraph bipartite_cayley(const ElementSet& a);

// V_i, W_i layers for i = 0..l-2, coordinates j, k in 1..m.
Digraph glm(std::size_t l, std::size_t m);
Vertex glm_index(std::size_t l, std::size_t m, bool w_side, std::size_t i, std::size_t j, std::size_t k);

struct ClosedWalk {
    std::vector<Vertex> vertices;  // v_0 .. v_{k-1}; step i joins v_i and v_{i+1 mod k}
    std::vector<bool> forward;     // step i uses arc v_i -> v_{i+1} when true
};
std::size_t walk_type(const Digraph& d, const ClosedWalk& w);

struct FkResult {
    bool free = true;
    BigInt max_walks = 0;  // largest entry of A^k
    std::optional<std::pair<Path, Path>> witness;
};
FkResult is_fk_free(const Digraph& d, unsigned k);

struct CllResult {
    std::optional<std::pair<Path, Path>> witness;
    bool exact = true;
    std::uint64_t paths = 0;
};
CllResult find_cll(const Digraph& d, std::size_t l, std::uint64_t max_paths = 50'000'000);

struct DegreeProfile {
    std::size_t min_out = 0, min_in = 0, max_out = 0, max_in = 0;
    std::size_t min_semidegree() const { return std::min(min_out, min_in); }
};
DegreeProfile degree_profile(const Digraph& d);

struct LayerResult {
    Digraph graph;
    std::vector<std::uint32_t> classes;
    std::uint64_t tries = 0;
    bool success = false;
};
LayerResult layered_subgraph(const Digraph& d, std::size_t h, const Rational& eps, std::uint64_t seed,
                             std::uint64_t max_tries);

struct InducedResult {
    Digraph graph;
    std::vector<Vertex> kept;  // original indices of the kept vertices
    std::uint64_t tries = 0;
    bool success = false;
};
InducedResult random_induced_subgraph(const Digraph& d, std::size_t m, const Rational& eps, std::uint64_t seed,
                                      std::uint64_t max_tries);
Digraph induced_subgraph(const Digraph& d, const std::vector<Vertex>& keep);

// nullopt for forests
std::optional<std::size_t> graph_girth(const UndirectedGraph& g);

// ---- counting ----
inline constexpr std::size_t kHamiltonDpCap = 20;
// Directed Hamilton cycles up to rotation. Subset DP up to kHamiltonDpCap
// vertices, pruned backtracking above that (throws past max_nodes).
BigInt count_hamilton_cycles(const Digraph& d, std::uint64_t max_nodes = 50'000'000);
// Each cycle listed from vertex 0.
std::vector<Path> enumerate_hamilton_cycles(const Digraph& d, std::uint64_t max_cycles = 1'000'000);
// Undirected Hamilton cycles from vertex 0, one orientation each (second vertex < last).
// Stops with an exception past max_nodes search nodes.
std::vector<Path> enumerate_undirected_hamilton_cycles(const UndirectedGraph& g, std::uint64_t max_nodes);

struct BestCount {
    BigInt arborescences;
    BigInt factorial_product;
    BigInt circuits;
};
BestCount best_eulerian_count(const Digraph& d);
// Eulerian circuits starting with the first arc out of vertex 0.
BigInt count_eulerian_circuits_direct(const Digraph& d, std::size_t max_arcs = 24);

struct TransitionVector {
    std::size_t m = 0;
    std::vector<std::uint32_t> f, g;  // values in 1..m, length m^2
};
bool is_transition_vector(const TransitionVector& t);
BigInt transition_vector_count(std::size_t m);
std::vector<TransitionVector> enumerate_transition_vectors(std::size_t m);

BigInt glm_hamilton_formula(std::size_t r, std::size_t m);

struct TwoPartCycle {
    std::size_t p_from = 0, p_to = 0;  // positions in P, p_from < p_to
    std::size_t q_from = 0, q_to = 0;  // positions in Q of the same endpoints
    Path cycle;                        // P part then Q part back
    std::size_t type = 0;
};
std::vector<TwoPartCycle> two_part_cycles(const Path& p, const Path& q, std::size_t l);

class SigmaFamily {
public:
    SigmaFamily(std::size_t n, std::size_t r);
    std::size_t n() const { return n_; }
    std::size_t r() const { return r_; }
    std::size_t part_size() const { return s_; }
    BigInt size() const;
    // vertices of N_c
    std::vector<Vertex> part(std::size_t c) const;
    // member by mixed-radix index over (2r+1) orderings of the parts
    Path member(std::uint64_t index) const;
    void for_each(const std::function<void(const Path&)>& visit) const;

private:
    std::size_t n_, r_, s_;
};

// file formats: "n" then "u v" lines, 1-indexed
Digraph read_digraph(const std::string& path);
void write_digraph(const Digraph& d, std::ostream& out);
UndirectedGraph read_edge_list(const std::string& path);
void write_labels(const Digraph& d, std::ostream& out);

} // namespace sidonkit
