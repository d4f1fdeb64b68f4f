#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "sidonkit/digraph.hpp"
#include "sidonkit/group_catalogue.hpp"
#include "sidonkit/rng.hpp"
#include "sidonkit/sidon.hpp"

using namespace sidonkit;

TEST_CASE("cayley digraphs")
{
    const auto z4 = build_group("Z:4");
    const auto d = cayley_digraph(ElementSet(z4, {1}));
    CHECK(d.arc_count() == 4);
    CHECK(count_hamilton_cycles(d) == 1);
    CHECK(cayley_digraph(ElementSet(z4, {})).arc_count() == 0);
    CHECK_THROWS(cayley_digraph(ElementSet(z4, {0, 1})));
}

TEST_CASE("bipartite cayley girth")
{
    const auto z7 = build_group("Z:7");
    CHECK(graph_girth(bipartite_cayley(ElementSet(z7, {0, 1, 3}))) == std::optional<std::size_t>(6));
    CHECK(!graph_girth(bipartite_cayley(ElementSet(z7, {2}))));
    CHECK(graph_girth(bipartite_cayley(ElementSet(build_group("Z:4"), {0, 1}))) == std::optional<std::size_t>(8));
    CHECK(graph_girth(complete_bipartite_graph(3, 3)) == std::optional<std::size_t>(4));
    CHECK(graph_girth(petersen_graph()) == std::optional<std::size_t>(5));
    CHECK(graph_girth(dodecahedron_graph()) == std::optional<std::size_t>(5));
    CHECK(!graph_girth(path_graph(6)));
}

TEST_CASE("girth and S_k' agree where the implication holds")
{
    // girth > 2k forces S_k'; S_k' forbids 2k-cycles. The converse of the first
    // fails: in Z2xZ2, {(0,0),(1,0)} is S_3' yet its bipartite Cayley graph is a
    // union of 4-cycles.
    Rng rng(5);
    const auto cat = small_group_catalogue();
    for (const auto& e : cat) {
        const auto& g = e.group;
        for (int trial = 0; trial < 15; ++trial) {
            const auto pick = rng.sample(g.size(), std::min<std::uint32_t>(g.size(), 2 + static_cast<std::uint32_t>(rng.below(3))));
            const ElementSet a(g, std::vector<Element>(pick.begin(), pick.end()));
            const auto bc = bipartite_cayley(a);
            const auto gi = graph_girth(bc);
            for (unsigned k : {2u, 3u}) {
                const bool sp = check_sk_prime(a, k).holds;
                if (!gi || *gi > 2 * k) CHECK(sp);
                if (sp) CHECK(!oracle::has_cycle_of_length(bc, 2 * k));
            }
        }
    }
    const auto v = build_group("prod(Z:2,Z:2)");
    const ElementSet a(v, {0, 2});
    CHECK(check_sk_prime(a, 3).holds);
    CHECK(graph_girth(bipartite_cayley(a)) == std::optional<std::size_t>(4));
}

TEST_CASE("F_k freeness matches the S_k verifier on Cayley digraphs")
{
    Rng rng(9);
    for (const auto& e : small_group_catalogue()) {
        const auto& g = e.group;
        if (g.order() < 3) continue;
        for (int trial = 0; trial < 10; ++trial) {
            const auto size = 1 + static_cast<std::uint32_t>(rng.below(std::min<std::uint64_t>(4, g.order() - 1)));
            auto pick = rng.sample(g.size() - 1, size);
            std::vector<Element> members;
            for (auto x : pick) members.push_back(x + 1);  // never the identity
            const ElementSet a(g, members);
            for (unsigned k : {2u, 3u}) {
                const auto fk = is_fk_free(cayley_digraph(a), k);
                CHECK(fk.free == check_sk(a, k).holds);
                if (!fk.free) {
                    REQUIRE(fk.witness);
                    const auto& [p, q] = *fk.witness;
                    CHECK(p != q);
                    CHECK(p.front() == q.front());
                    CHECK(p.back() == q.back());
                }
            }
        }
    }
    CHECK(is_fk_free(directed_cycle(5), 3).free);
    CHECK(!is_fk_free(bidirected_complete(3), 2).free);
}

TEST_CASE("glm structure")
{
    auto d = glm(2, 2);
    CHECK(d.size() == 8);
    CHECK(d.arc_count() == 16);
    const auto p = degree_profile(d);
    CHECK(p.min_out == 2);
    CHECK(p.max_out == 2);
    CHECK(p.min_in == 2);
    CHECK(p.max_in == 2);
    d = glm(2, 1);
    CHECK(d.size() == 2);
    CHECK(d.has_arc(0, 1));
    CHECK(d.has_arc(1, 0));
    d = glm(3, 2);
    CHECK(d.labels().size() == 16);
    CHECK(d.labels()[glm_index(3, 2, false, 1, 2, 1)] == "v 1 2 1");
    CHECK(d.labels()[glm_index(3, 2, true, 0, 1, 2)] == "w 0 1 2");
    CHECK_THROWS(glm(1, 2));
}

TEST_CASE("walk types")
{
    const auto tri = directed_cycle(3);
    CHECK(walk_type(tri, {{0, 1, 2}, {true, true, true}}) == 3);
    Digraph anti(4);
    anti.add_arc(0, 1);
    anti.add_arc(2, 1);
    anti.add_arc(2, 3);
    anti.add_arc(0, 3);
    CHECK(walk_type(anti, {{0, 1, 2, 3}, {true, false, true, false}}) == 0);
    Digraph mix(4);
    mix.add_arc(0, 1);
    mix.add_arc(1, 2);
    mix.add_arc(2, 3);
    mix.add_arc(0, 3);
    CHECK(walk_type(mix, {{0, 1, 2, 3}, {true, true, true, false}}) == 2);
    CHECK_THROWS(walk_type(mix, {{0, 2}, {true, true}}));
}

TEST_CASE("C_{l,l} detection")
{
    for (std::size_t l : {2u, 3u, 4u}) {
        const auto r = find_cll(cll_graph(l), l);
        REQUIRE(r.witness);
        CHECK(r.witness->first.size() == l + 1);
    }
    for (auto [l, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        const auto r = find_cll(glm(l, m), l);
        CHECK(!r.witness);
        CHECK(r.exact);
    }
}

TEST_CASE("degree profiles")
{
    const auto c = degree_profile(directed_cycle(6));
    CHECK(c.min_semidegree() == 1);
    CHECK(c.max_in == 1);
    const auto e = degree_profile(Digraph(5));
    CHECK(e.max_out == 0);
    CHECK(e.min_semidegree() == 0);
}

TEST_CASE("layering leaves only type 0 short closed walks")
{
    const auto k8 = bidirected_complete(8);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto r = layered_subgraph(k8, 2, Rational(1, 2), seed, 200);
        CHECK(oracle::max_closed_walk_type(r.graph, 3) == 0);
    }
    const auto g22 = glm(2, 2);
    for (std::size_t h : {1u, 2u, 3u}) {
        const auto r = layered_subgraph(g22, h, Rational(1, 2), 4, 50);
        CHECK(oracle::max_closed_walk_type(r.graph, 2 * h - 1) == 0);
    }
    // a directed 6-cycle must keep all six arcs, which three tries essentially never manage
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto r = layered_subgraph(directed_cycle(6), 3, Rational(1, 2), seed, 3);
        CHECK(!r.success);
        CHECK(r.tries == 3);
    }
    std::set<std::uint64_t> tries;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto r = layered_subgraph(k8, 3, Rational(1, 2), seed, 1000);
        CHECK(r.success);
        tries.insert(r.tries);
    }
    CHECK(tries.size() > 1);
    const auto empty = layered_subgraph(Digraph(4), 2, Rational(1, 2), 1, 10);
    CHECK(empty.success);
}

TEST_CASE("random induced subgraphs")
{
    const auto d = glm(2, 4);
    const auto full = random_induced_subgraph(d, d.size(), Rational(1, 2), 1, 10);
    CHECK(full.success);
    CHECK(full.tries == 1);
    CHECK(full.graph.arc_count() == d.arc_count());
    const auto r = random_induced_subgraph(d, 24, Rational(1, 2), 7, 1000);
    CHECK(r.success);
    CHECK(r.graph.size() == 24);
    Digraph sparse(10);
    sparse.add_arc(0, 1);
    const auto s = random_induced_subgraph(sparse, 6, Rational(1, 2), 3, 100);
    CHECK(s.success);
    CHECK(s.graph.size() == 6);
}

TEST_CASE("hamilton counts")
{
    for (std::size_t n : {2u, 5u, 9u}) CHECK(count_hamilton_cycles(directed_cycle(n)) == 1);
    CHECK(count_hamilton_cycles(glm(2, 2)) == 4);
    CHECK(count_hamilton_cycles(glm(3, 2)) == 64);
    CHECK(count_hamilton_cycles(glm(2, 2)) == glm_hamilton_formula(2, 2));
    CHECK(count_hamilton_cycles(glm(3, 2)) == glm_hamilton_formula(3, 2));
    CHECK(glm_hamilton_formula(2, 1) == 1);
    for (std::size_t n = 2; n <= 7; ++n) CHECK(count_hamilton_cycles(bidirected_complete(n)) == factorial(static_cast<unsigned>(n - 1)));
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const auto n = 3 + rng.below(6);
        Digraph d(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if (u != v && rng.below(3) == 0) d.add_arc(u, v);
        CHECK(count_hamilton_cycles(d) == oracle::hamilton_cycles(d));
        CHECK(enumerate_hamilton_cycles(d).size() == oracle::hamilton_cycles(d));
    }
}

TEST_CASE("eulerian circuits")
{
    CHECK(best_eulerian_count(directed_cycle(3)).circuits == 1);
    const auto k22 = bidirected_complete_bipartite(2);
    CHECK(best_eulerian_count(k22).circuits == 4);
    CHECK(count_eulerian_circuits_direct(k22) == 4);
    CHECK(best_eulerian_count(bidirected_complete_bipartite(3)).circuits == 5184);
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto k = bidirected_complete(n);
        CHECK(best_eulerian_count(k).circuits == count_eulerian_circuits_direct(k));
    }
    Digraph bad(3);
    bad.add_arc(0, 1);
    CHECK_THROWS(best_eulerian_count(bad));
}

TEST_CASE("transition vectors")
{
    CHECK(transition_vector_count(1) == 1);
    CHECK(transition_vector_count(2) == 4);
    CHECK(transition_vector_count(3) == 5184);
    for (std::size_t m = 1; m <= 3; ++m) {
        const auto all = enumerate_transition_vectors(m);
        CHECK(BigInt(all.size()) == transition_vector_count(m));
        std::set<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>> distinct;
        for (const auto& t : all) {
            CHECK(is_transition_vector(t));
            CHECK(t.f[0] == 1);
            CHECK(t.g[0] == 1);
            distinct.insert({t.f, t.g});
        }
        CHECK(distinct.size() == all.size());
    }
    CHECK(BigInt(enumerate_transition_vectors(3).size()) == best_eulerian_count(bidirected_complete_bipartite(3)).circuits);
}

TEST_CASE("two part cycles")
{
    const Path p{0, 1, 2, 3}, q{0, 2, 1, 3};
    CHECK(two_part_cycles(p, p, 3).empty());
    CHECK(!two_part_cycles(p, q, 3).empty());
    CHECK(two_part_cycles(p, q, 4).empty());
}

TEST_CASE("sigma family")
{
    const SigmaFamily f(10, 2);
    CHECK(f.size() == 32);
    CHECK(SigmaFamily(5, 2).size() == 1);
    std::vector<Path> all;
    f.for_each([&](const Path& p) { all.push_back(p); });
    CHECK(all.size() == 32);
    std::set<Path> distinct(all.begin(), all.end());
    CHECK(distinct.size() == 32);
    for (const auto& p : all)
        for (std::size_t i = 0; i < p.size(); ++i) {
            const auto part = f.part(i % 5);
            CHECK(std::find(part.begin(), part.end(), p[i]) != part.end());
        }
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
            for (const auto& c : two_part_cycles(all[i], all[j], 4)) CHECK(c.type == 0);
    CHECK_THROWS(SigmaFamily(9, 2));
}

TEST_CASE("digraph files")
{
    const auto d = glm(2, 2);
    std::ostringstream ss;
    write_digraph(d, ss);
    const auto path = (std::filesystem::temp_directory_path() / "sidonkit_glm22.txt").string();
    {
        std::ofstream f(path);
        f << ss.str();
    }
    const auto back = read_digraph(path);
    CHECK(back.arcs() == d.arcs());
    std::ostringstream lab;
    write_labels(d, lab);
    CHECK(lab.str().rfind("1 v 0 1 1\n", 0) == 0);
}
