#include "sidonkit/digraph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "sidonkit/rng.hpp"

namespace sidonkit {

void Digraph::add_arc(Vertex u, Vertex v)
{
    if (u >= size() || v >= size()) throw std::out_of_range("arc endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    auto& o = out_[u];
    auto it = std::lower_bound(o.begin(), o.end(), v);
    if (it != o.end() && *it == v) throw std::invalid_argument("parallel arcs are not allowed");
    o.insert(it, v);
    auto& i = in_[v];
    i.insert(std::lower_bound(i.begin(), i.end(), u), u);
    ++arcs_;
}

bool Digraph::has_arc(Vertex u, Vertex v) const
{
    if (u >= size() || v >= size()) return false;
    return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Digraph::arcs() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(arcs_);
    for (Vertex u = 0; u < size(); ++u)
        for (auto v : out_[u]) out.emplace_back(u, v);
    return out;
}

void Digraph::set_labels(std::vector<std::string> labels)
{
    if (!labels.empty() && labels.size() != size()) throw std::invalid_argument("one label per vertex");
    labels_ = std::move(labels);
}

void UndirectedGraph::add_edge(Vertex u, Vertex v)
{
    if (u >= size() || v >= size()) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (has_edge(u, v)) throw std::invalid_argument("parallel edges are not allowed");
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edges_;
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const
{
    if (u >= size() || v >= size()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> UndirectedGraph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < size(); ++u)
        for (auto v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

UndirectedGraph petersen_graph()
{
    UndirectedGraph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

UndirectedGraph dodecahedron_graph()
{
    // LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2
    static const int lcf[10] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
    UndirectedGraph g(20);
    for (Vertex i = 0; i < 20; ++i) g.add_edge(i, (i + 1) % 20);
    for (int i = 0; i < 20; ++i) {
        const int j = ((i + lcf[i % 10]) % 20 + 20) % 20;
        if (!g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)))
            g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
    return g;
}

UndirectedGraph cycle_graph(std::size_t n)
{
    if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
    UndirectedGraph g(n);
    for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % n));
    return g;
}

UndirectedGraph path_graph(std::size_t n)
{
    UndirectedGraph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

UndirectedGraph complete_bipartite_graph(std::size_t a, std::size_t b)
{
    UndirectedGraph g(a + b);
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) g.add_edge(i, static_cast<Vertex>(a + j));
    return g;
}

Digraph directed_cycle(std::size_t n)
{
    if (n < 2) throw std::invalid_argument("a directed cycle needs at least 2 vertices");
    Digraph d(n);
    for (Vertex i = 0; i < n; ++i) d.add_arc(i, static_cast<Vertex>((i + 1) % n));
    return d;
}

Digraph bidirected_complete(std::size_t n)
{
    Digraph d(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) d.add_arc(u, v);
    return d;
}

Digraph bidirected_complete_bipartite(std::size_t m)
{
    Digraph d(2 * m);
    for (Vertex i = 0; i < m; ++i)
        for (Vertex j = 0; j < m; ++j) {
            d.add_arc(i, static_cast<Vertex>(m + j));
            d.add_arc(static_cast<Vertex>(m + j), i);
        }
    return d;
}

Digraph cll_graph(std::size_t l)
{
    if (l < 2) throw std::invalid_argument("l must be at least 2");
    Digraph d(2 + 2 * (l - 1));
    for (Vertex side = 0; side < 2; ++side) {
        Vertex prev = 0;
        for (std::size_t i = 0; i + 1 < l; ++i) {
            const auto v = static_cast<Vertex>(2 + side * (l - 1) + i);
            d.add_arc(prev, v);
            prev = v;
        }
        d.add_arc(prev, 1);
    }
    return d;
}

Digraph cayley_digraph(const ElementSet& a)
{
    const auto& g = a.group();
    if (a.contains(g.identity())) throw std::invalid_argument("identity in the connection set gives loops");
    Digraph d(g.order());
    for (Element x = 0; x < g.order(); ++x)
        for (auto s : a.members()) d.add_arc(x, g.mul(x, s));
    return d;
}

UndirectedGraph bipartite_cayley(const ElementSet& a)
{
    const auto& g = a.group();
    const auto n = g.size();
    UndirectedGraph b(2 * std::size_t{n});
    for (Element x = 0; x < n; ++x)
        for (auto s : a.members()) b.add_edge(x, n + g.mul(x, s));
    return b;
}

Vertex glm_index(std::size_t l, std::size_t m, bool w_side, std::size_t i, std::size_t j, std::size_t k)
{
    return static_cast<Vertex>((((w_side ? 1 : 0) * (l - 1) + i) * m + (j - 1)) * m + (k - 1));
}

Digraph glm(std::size_t l, std::size_t m)
{
    if (l < 2 || m < 1) throw std::invalid_argument("glm needs l >= 2 and m >= 1");
    const std::size_t layers = l - 1;
    Digraph d(2 * layers * m * m);
    std::vector<std::string> labels(d.size());
    for (int side = 0; side < 2; ++side)
        for (std::size_t i = 0; i < layers; ++i)
            for (std::size_t j = 1; j <= m; ++j)
                for (std::size_t k = 1; k <= m; ++k) {
                    const auto u = glm_index(l, m, side, i, j, k);
                    labels[u] = std::string(side ? "w" : "v") + " " + std::to_string(i) + " " + std::to_string(j) +
                                " " + std::to_string(k);
                    const bool last = i + 1 == layers;
                    for (std::size_t x = 1; x <= m; ++x) {
                        if (side == 0) {
                            // V layers vary j and keep k; the last one feeds W_0
                            d.add_arc(u, last ? glm_index(l, m, true, 0, x, k) : glm_index(l, m, false, i + 1, x, k));
                        } else {
                            // W layers vary k and keep j; the last one feeds V_0
                            d.add_arc(u, last ? glm_index(l, m, false, 0, j, x) : glm_index(l, m, true, i + 1, j, x));
                        }
                    }
                }
    d.set_labels(std::move(labels));
    return d;
}

std::size_t walk_type(const Digraph& d, const ClosedWalk& w)
{
    const auto len = w.vertices.size();
    if (len == 0 || w.forward.size() != len) throw std::invalid_argument("malformed closed walk");
    std::size_t fwd = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const auto u = w.vertices[i], v = w.vertices[(i + 1) % len];
        const bool ok = w.forward[i] ? d.has_arc(u, v) : d.has_arc(v, u);
        if (!ok) throw std::invalid_argument("closed walk uses a missing arc");
        fwd += w.forward[i];
    }
    const auto bwd = len - fwd;
    return fwd > bwd ? fwd - bwd : bwd - fwd;
}

FkResult is_fk_free(const Digraph& d, unsigned k)
{
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    const auto n = d.size();
    FkResult res;
    for (Vertex u = 0; u < n; ++u) {
        // layers[t][x] = number of walks of length t from u to x
        std::vector<std::vector<BigInt>> layers(k + 1, std::vector<BigInt>(n, 0));
        layers[0][u] = 1;
        for (unsigned t = 0; t < k; ++t)
            for (Vertex x = 0; x < n; ++x) {
                if (layers[t][x] == 0) continue;
                for (auto y : d.out(x)) layers[t + 1][y] += layers[t][x];
            }
        for (Vertex v = 0; v < n; ++v) {
            const auto& c = layers[k][v];
            if (c > res.max_walks) res.max_walks = c;
            if (c >= 2 && !res.witness) {
                res.free = false;
                // two walks, built backwards from v in increasing predecessor order
                std::vector<Path> found;
                Path rev{v};
                auto dfs = [&](auto&& self, Vertex at, unsigned t) -> void {
                    if (t == 0) {
                        found.emplace_back(rev.rbegin(), rev.rend());
                        return;
                    }
                    for (auto p : d.in(at)) {
                        if (layers[t - 1][p] == 0) continue;
                        rev.push_back(p);
                        self(self, p, t - 1);
                        rev.pop_back();
                        if (found.size() >= 2) return;
                    }
                };
                dfs(dfs, v, k);
                res.witness = std::make_pair(found.at(0), found.at(1));
            }
        }
    }
    return res;
}

CllResult find_cll(const Digraph& d, std::size_t l, std::uint64_t max_paths)
{
    if (l < 2) throw std::invalid_argument("l must be at least 2");
    const auto n = d.size();
    CllResult res;
    std::vector<bool> on_path(n, false);
    for (Vertex x = 0; x < n && !res.witness; ++x) {
        std::vector<std::vector<Path>> by_end(n);
        Path path{x};
        on_path[x] = true;
        bool capped = false;
        auto dfs = [&](auto&& self) -> void {
            if (path.size() == l + 1) {
                if (++res.paths > max_paths) {
                    capped = true;
                    return;
                }
                by_end[path.back()].push_back(path);
                return;
            }
            for (auto y : d.out(path.back())) {
                if (on_path[y]) continue;
                on_path[y] = true;
                path.push_back(y);
                self(self);
                path.pop_back();
                on_path[y] = false;
                if (capped) return;
            }
        };
        dfs(dfs);
        on_path[x] = false;
        if (capped) {
            res.exact = false;
            return res;
        }
        std::vector<char> mark(n, 0);
        for (Vertex y = 0; y < n && !res.witness; ++y) {
            const auto& ps = by_end[y];
            for (std::size_t a = 0; a < ps.size() && !res.witness; ++a) {
                for (std::size_t i = 1; i < l; ++i) mark[ps[a][i]] = 1;
                for (std::size_t b = a + 1; b < ps.size(); ++b) {
                    bool disjoint = true;
                    for (std::size_t i = 1; i < l && disjoint; ++i)
                        if (mark[ps[b][i]]) disjoint = false;
                    if (disjoint) {
                        res.witness = std::make_pair(ps[a], ps[b]);
                        break;
                    }
                }
                for (std::size_t i = 1; i < l; ++i) mark[ps[a][i]] = 0;
            }
        }
    }
    return res;
}

DegreeProfile degree_profile(const Digraph& d)
{
    DegreeProfile p;
    if (d.size() == 0) return p;
    p.min_out = p.min_in = SIZE_MAX;
    for (Vertex v = 0; v < d.size(); ++v) {
        p.min_out = std::min(p.min_out, d.out(v).size());
        p.max_out = std::max(p.max_out, d.out(v).size());
        p.min_in = std::min(p.min_in, d.in(v).size());
        p.max_in = std::max(p.max_in, d.in(v).size());
    }
    return p;
}

LayerResult layered_subgraph(const Digraph& d, std::size_t h, const Rational& eps, std::uint64_t seed,
                             std::uint64_t max_tries)
{
    if (h < 1) throw std::invalid_argument("h must be positive");
    if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must lie strictly between 0 and 1");
    const auto classes = 2 * h;
    const Rational need = (1 - eps) / Rational(classes) * Rational(degree_profile(d).min_out);
    Rng rng(seed);
    LayerResult best;
    bool have_best = false;
    for (std::uint64_t t = 1; t <= std::max<std::uint64_t>(max_tries, 1); ++t) {
        LayerResult cur;
        cur.tries = t;
        cur.classes.resize(d.size());
        for (auto& c : cur.classes) c = static_cast<std::uint32_t>(rng.below(classes));
        cur.graph = Digraph(d.size());
        for (auto [u, v] : d.arcs())
            if (cur.classes[v] == (cur.classes[u] + 1) % classes) cur.graph.add_arc(u, v);
        cur.graph.set_labels(d.labels());
        const auto got = degree_profile(cur.graph).min_out;
        cur.success = Rational(got) >= need;
        if (cur.success) return cur;
        if (!have_best || got > degree_profile(best.graph).min_out) {
            best = std::move(cur);
            have_best = true;
        }
        best.tries = t;
    }
    return best;
}

Digraph induced_subgraph(const Digraph& d, const std::vector<Vertex>& keep)
{
    std::vector<std::int64_t> pos(d.size(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = static_cast<std::int64_t>(i);
    Digraph h(keep.size());
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (auto v : d.out(keep[i]))
            if (pos[v] >= 0) h.add_arc(static_cast<Vertex>(i), static_cast<Vertex>(pos[v]));
        if (!d.labels().empty()) labels.push_back(d.labels()[keep[i]]);
    }
    h.set_labels(std::move(labels));
    return h;
}

InducedResult random_induced_subgraph(const Digraph& d, std::size_t m, const Rational& eps, std::uint64_t seed,
                                      std::uint64_t max_tries)
{
    const auto n = d.size();
    if (n == 0 || 2 * m < n || m > n) throw std::invalid_argument("need n/2 <= m <= n");
    if (eps <= 0 || eps >= 1) throw std::invalid_argument("eps must lie strictly between 0 and 1");
    const auto base = degree_profile(d);
    const Rational scale = (1 - eps) * Rational(m, n);
    const Rational need_out = scale * base.min_out, need_in = scale * base.min_in;
    Rng rng(seed);
    InducedResult best;
    bool have_best = false;
    std::size_t best_score = 0;
    for (std::uint64_t t = 1; t <= std::max<std::uint64_t>(max_tries, 1); ++t) {
        InducedResult cur;
        cur.tries = t;
        for (Vertex v = 0; v < n; ++v)
            if (rng.below(n) < m) cur.kept.push_back(v);
        cur.graph = induced_subgraph(d, cur.kept);
        const auto p = degree_profile(cur.graph);
        cur.success = cur.kept.size() == m && Rational(p.min_out) >= need_out && Rational(p.min_in) >= need_in;
        if (cur.success) return cur;
        const std::size_t score = cur.kept.size() == m ? 1 + p.min_semidegree() : 0;
        if (!have_best || score > best_score) {
            best = std::move(cur);
            best_score = score;
            have_best = true;
        }
        best.tries = t;
    }
    return best;
}

std::optional<std::size_t> graph_girth(const UndirectedGraph& g)
{
    const auto n = g.size();
    std::optional<std::size_t> best;
    std::vector<std::int64_t> dist(n), parent(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<Vertex> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            const auto u = q.front();
            q.pop_front();
            if (best && static_cast<std::size_t>(2 * dist[u] + 1) >= *best) break;
            for (auto w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (parent[u] != static_cast<std::int64_t>(w)) {
                    const auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
                    if (!best || len < *best) best = len;
                }
            }
        }
    }
    return best;
}

namespace {

std::ifstream open_or_throw(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return in;
}

} // namespace

Digraph read_digraph(const std::string& path)
{
    auto in = open_or_throw(path);
    std::size_t n = 0;
    if (!(in >> n)) throw std::invalid_argument("digraph file: missing vertex count in " + path);
    Digraph d(n);
    std::uint64_t u, v;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("digraph file: dangling endpoint in " + path);
        if (u < 1 || v < 1 || u > n || v > n) throw std::invalid_argument("digraph file: vertex out of range");
        d.add_arc(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    }
    if (!in.eof()) throw std::invalid_argument("digraph file: bad token in " + path);
    return d;
}

void write_digraph(const Digraph& d, std::ostream& out)
{
    out << d.size() << '\n';
    for (auto [u, v] : d.arcs()) out << u + 1 << ' ' << v + 1 << '\n';
}

UndirectedGraph read_edge_list(const std::string& path)
{
    auto in = open_or_throw(path);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    std::uint64_t u, v, n = 0;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint in " + path);
        if (u < 1 || v < 1) throw std::invalid_argument("edge list: vertices are 1-indexed");
        edges.emplace_back(u, v);
        n = std::max({n, u, v});
    }
    if (!in.eof()) throw std::invalid_argument("edge list: bad token in " + path);
    UndirectedGraph g(n);
    for (auto [a, b] : edges) g.add_edge(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
    return g;
}

void write_labels(const Digraph& d, std::ostream& out)
{
    for (std::size_t i = 0; i < d.labels().size(); ++i) out << i + 1 << ' ' << d.labels()[i] << '\n';
}

} // namespace sidonkit
