#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sidonkit/digraph.hpp"
#include "sidonkit/sidon.hpp"

namespace sidonkit {

namespace {

BigInt count_hamilton_backtrack(const Digraph& d, std::uint64_t max_nodes)
{
    const auto n = d.size();
    std::vector<bool> used(n, false);
    used[0] = true;
    std::uint64_t nodes = 0;
    BigInt total = 0;
    // every unvisited vertex still needs a free way in and a free way out
    auto viable = [&](Vertex end) {
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool in_ok = false, out_ok = false;
            for (auto u : d.in(v))
                if (!used[u] || u == end) {
                    in_ok = true;
                    break;
                }
            for (auto w : d.out(v))
                if (!used[w] || w == 0) {
                    out_ok = true;
                    break;
                }
            if (!in_ok || !out_ok) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, Vertex end, std::size_t depth) -> void {
        if (++nodes > max_nodes) throw WorkCapExceeded("Hamilton cycle count exceeded its node budget");
        if (depth == n) {
            if (d.has_arc(end, 0)) ++total;
            return;
        }
        if (!viable(end)) return;
        for (auto w : d.out(end)) {
            if (used[w]) continue;
            used[w] = true;
            self(self, w, depth + 1);
            used[w] = false;
        }
    };
    dfs(dfs, 0, 1);
    return total;
}

} // namespace

BigInt count_hamilton_cycles(const Digraph& d, std::uint64_t max_nodes)
{
    const auto n = d.size();
    if (n < 2) return 0;
    if (n > kHamiltonDpCap) return count_hamilton_backtrack(d, max_nodes);
    // paths from vertex 0; bit v-1 of the mask stands for vertex v
    const std::size_t rest = n - 1, masks = std::size_t{1} << rest;
    std::vector<std::uint64_t> dp(masks * rest, 0);
    for (auto v : d.out(0)) dp[(std::size_t{1} << (v - 1)) * rest + (v - 1)] = 1;
    for (std::size_t mask = 1; mask < masks; ++mask)
        for (std::size_t v = 0; v < rest; ++v) {
            const auto c = dp[mask * rest + v];
            if (c == 0) continue;
            for (auto w : d.out(static_cast<Vertex>(v + 1))) {
                if (w == 0) continue;
                const auto bit = std::size_t{1} << (w - 1);
                if (mask & bit) continue;
                dp[(mask | bit) * rest + (w - 1)] += c;
            }
        }
    BigInt total = 0;
    for (std::size_t v = 0; v < rest; ++v)
        if (d.has_arc(static_cast<Vertex>(v + 1), 0)) total += dp[(masks - 1) * rest + v];
    return total;
}

std::vector<Path> enumerate_hamilton_cycles(const Digraph& d, std::uint64_t max_cycles)
{
    std::vector<Path> out;
    const auto n = d.size();
    if (n < 2) return out;
    std::vector<bool> used(n, false);
    Path path{0};
    used[0] = true;
    auto dfs = [&](auto&& self) -> void {
        if (path.size() == n) {
            if (d.has_arc(path.back(), 0)) {
                if (out.size() >= max_cycles) throw WorkCapExceeded("enumerate_hamilton_cycles: too many cycles");
                out.push_back(path);
            }
            return;
        }
        for (auto w : d.out(path.back())) {
            if (used[w]) continue;
            used[w] = true;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[w] = false;
        }
    };
    dfs(dfs);
    return out;
}

std::vector<Path> enumerate_undirected_hamilton_cycles(const UndirectedGraph& g, std::uint64_t max_nodes)
{
    std::vector<Path> out;
    const auto n = g.size();
    if (n < 3) return out;
    std::vector<bool> used(n, false);
    Path path{0};
    used[0] = true;
    std::uint64_t nodes = 0;
    auto dfs = [&](auto&& self) -> void {
        if (++nodes > max_nodes) throw WorkCapExceeded("Hamilton cycle enumeration exceeded its node budget");
        if (path.size() == n) {
            if (g.has_edge(path.back(), 0) && path[1] < path.back()) out.push_back(path);
            return;
        }
        for (auto w : g.neighbors(path.back())) {
            if (used[w]) continue;
            used[w] = true;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[w] = false;
        }
    };
    dfs(dfs);
    return out;
}

namespace {

// Fraction-free Gaussian elimination.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a)
{
    const auto n = a.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool weakly_connected(const Digraph& d)
{
    const auto n = d.size();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (const auto* nbrs : {&d.out(u), &d.in(u)})
            for (auto w : *nbrs)
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
    }
    return count == n;
}

} // namespace

BestCount best_eulerian_count(const Digraph& d)
{
    const auto n = d.size();
    for (Vertex v = 0; v < n; ++v)
        if (d.out(v).size() != d.in(v).size()) throw std::invalid_argument("digraph is not balanced");
    if (n == 0 || d.arc_count() == 0 || !weakly_connected(d))
        throw std::invalid_argument("digraph is not connected");
    // arborescences oriented towards vertex 0: Laplacian diag(out) - A minus row/column 0
    std::vector<std::vector<BigInt>> lap(n - 1, std::vector<BigInt>(n - 1, 0));
    for (Vertex u = 1; u < n; ++u) {
        lap[u - 1][u - 1] += d.out(u).size();
        for (auto v : d.out(u))
            if (v != 0) lap[u - 1][v - 1] -= 1;
    }
    BestCount r;
    r.arborescences = bareiss_determinant(std::move(lap));
    r.factorial_product = 1;
    for (Vertex v = 0; v < n; ++v) r.factorial_product *= factorial(static_cast<unsigned>(d.out(v).size() - 1));
    r.circuits = r.arborescences * r.factorial_product;
    return r;
}

BigInt count_eulerian_circuits_direct(const Digraph& d, std::size_t max_arcs)
{
    if (d.arc_count() > max_arcs)
        throw WorkCapExceeded("direct Eulerian enumeration is limited to " + std::to_string(max_arcs) + " arcs");
    if (d.size() == 0 || d.out(0).empty()) return 0;
    const auto n = d.size();
    std::vector<std::vector<bool>> used(n);
    for (Vertex v = 0; v < n; ++v) used[v].assign(d.out(v).size(), false);
    used[0][0] = true;
    std::uint64_t count = 0;
    const auto total = d.arc_count();
    auto dfs = [&](auto&& self, Vertex at, std::size_t done) -> void {
        if (done == total) {
            if (at == 0) ++count;
            return;
        }
        const auto& outs = d.out(at);
        for (std::size_t i = 0; i < outs.size(); ++i) {
            if (used[at][i]) continue;
            used[at][i] = true;
            self(self, outs[i], done + 1);
            used[at][i] = false;
        }
    };
    dfs(dfs, d.out(0)[0], 1);
    return count;
}

bool is_transition_vector(const TransitionVector& t)
{
    const auto m = t.m, len = m * m;
    if (m == 0 || t.f.size() != len || t.g.size() != len) return false;
    if (t.f[0] != 1 || t.g[0] != 1) return false;
    std::set<std::pair<std::uint32_t, std::uint32_t>> xy, yx;
    for (std::size_t i = 0; i < len; ++i) {
        if (t.f[i] < 1 || t.f[i] > m || t.g[i] < 1 || t.g[i] > m) return false;
        xy.emplace(t.f[i], t.g[i]);
        yx.emplace(t.g[i], t.f[(i + 1) % len]);
    }
    return xy.size() == len && yx.size() == len;
}

BigInt transition_vector_count(std::size_t m)
{
    if (m == 0) throw std::invalid_argument("m must be positive");
    const auto mm = static_cast<unsigned>(m);
    return power(BigInt(m), 2 * (mm - 1)) * power(factorial(mm - 1), 2 * mm);
}

std::vector<TransitionVector> enumerate_transition_vectors(std::size_t m)
{
    if (m == 0 || m > 3) throw std::invalid_argument("transition vectors are enumerated only for 1 <= m <= 3");
    // Eulerian circuits of bidirected K_{m,m} that start with X_1 -> Y_1
    const auto d = bidirected_complete_bipartite(m);
    const auto n = d.size(), total = d.arc_count();
    std::vector<std::vector<bool>> used(n);
    for (Vertex v = 0; v < n; ++v) used[v].assign(d.out(v).size(), false);
    std::vector<TransitionVector> out;
    Path walk{0, static_cast<Vertex>(m)};
    used[0][0] = true;  // out(0)[0] is Y_1
    auto dfs = [&](auto&& self, std::size_t done) -> void {
        const auto at = walk.back();
        if (done == total) {
            if (at != 0) return;
            TransitionVector t;
            t.m = m;
            for (std::size_t i = 0; i + 1 < walk.size(); i += 2) {
                t.f.push_back(walk[i] + 1);
                t.g.push_back(static_cast<std::uint32_t>(walk[i + 1] - m + 1));
            }
            out.push_back(std::move(t));
            return;
        }
        const auto& outs = d.out(at);
        for (std::size_t i = 0; i < outs.size(); ++i) {
            if (used[at][i]) continue;
            used[at][i] = true;
            walk.push_back(outs[i]);
            self(self, done + 1);
            walk.pop_back();
            used[at][i] = false;
        }
    };
    dfs(dfs, 1);
    return out;
}

BigInt glm_hamilton_formula(std::size_t r, std::size_t m)
{
    if (r < 2 || m < 1) throw std::invalid_argument("need r >= 2 and m >= 1");
    const auto mm = static_cast<unsigned>(m);
    return transition_vector_count(m) * power(factorial(mm), static_cast<unsigned>(2 * m * (r - 2)));
}

std::vector<TwoPartCycle> two_part_cycles(const Path& p, const Path& q, std::size_t l)
{
    const auto n = p.size();
    if (q.size() != n) throw std::invalid_argument("paths have different lengths");
    Vertex top = 0;
    for (auto v : p) top = std::max(top, v);
    std::vector<std::int64_t> qpos(std::size_t{top} + 1, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (q[i] > top || qpos[q[i]] >= 0) throw std::invalid_argument("paths are not on the same vertex set");
        qpos[q[i]] = static_cast<std::int64_t>(i);
    }
    {
        std::vector<bool> seen(std::size_t{top} + 1, false);
        for (auto v : p) {
            if (seen[v] || qpos[v] < 0) throw std::invalid_argument("paths are not on the same vertex set");
            seen[v] = true;
        }
    }
    std::vector<TwoPartCycle> out;
    std::vector<bool> interior(std::size_t{top} + 1, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto a = j - i;
            const auto qi = static_cast<std::size_t>(qpos[p[i]]), qj = static_cast<std::size_t>(qpos[p[j]]);
            const auto b = qi > qj ? qi - qj : qj - qi;
            if (a + b != l || (a == 1 && b == 1)) continue;
            for (auto t = i + 1; t < j; ++t) interior[p[t]] = true;
            bool disjoint = true;
            for (auto t = std::min(qi, qj) + 1; t < std::max(qi, qj); ++t)
                if (interior[q[t]]) disjoint = false;
            for (auto t = i + 1; t < j; ++t) interior[p[t]] = false;
            if (!disjoint) continue;
            TwoPartCycle c;
            c.p_from = i;
            c.p_to = j;
            c.q_from = qi;
            c.q_to = qj;
            for (auto t = i; t <= j; ++t) c.cycle.push_back(p[t]);
            // back along Q from y to x, excluding both endpoints
            if (qj < qi)
                for (auto t = qj + 1; t < qi; ++t) c.cycle.push_back(q[t]);
            else
                for (auto t = qj; t-- > qi + 1;) c.cycle.push_back(q[t]);
            // P runs forward x -> y; Q agrees with the traversal when y precedes x in Q
            c.type = qj < qi ? a + b : (a > b ? a - b : b - a);
            out.push_back(std::move(c));
        }
    return out;
}

SigmaFamily::SigmaFamily(std::size_t n, std::size_t r) : n_(n), r_(r)
{
    if (r < 1 || n == 0 || n % (2 * r + 1) != 0) throw std::invalid_argument("sigma_paths needs (2r+1) | n");
    s_ = n / (2 * r + 1);
}

BigInt SigmaFamily::size() const
{
    return power(factorial(static_cast<unsigned>(s_)), static_cast<unsigned>(2 * r_ + 1));
}

std::vector<Vertex> SigmaFamily::part(std::size_t c) const
{
    std::vector<Vertex> out(s_);
    std::iota(out.begin(), out.end(), static_cast<Vertex>(c * s_));
    return out;
}

Path SigmaFamily::member(std::uint64_t index) const
{
    const auto parts = 2 * r_ + 1;
    const std::uint64_t radix = factorial(static_cast<unsigned>(s_)).convert_to<std::uint64_t>();
    std::vector<Permutation> order;
    for (std::size_t c = 0; c < parts; ++c) {
        order.push_back(Permutation::unrank(s_, index % radix));
        index /= radix;
    }
    if (index != 0) throw std::out_of_range("sigma family index out of range");
    Path path(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        const auto c = i % parts, t = i / parts;
        path[i] = static_cast<Vertex>(c * s_ + order[c](static_cast<std::uint32_t>(t)));
    }
    return path;
}

void SigmaFamily::for_each(const std::function<void(const Path&)>& visit) const
{
    const auto total = size();
    if (total > BigInt(UINT64_MAX)) throw WorkCapExceeded("sigma family too large to stream");
    const auto count = total.convert_to<std::uint64_t>();
    for (std::uint64_t i = 0; i < count; ++i) visit(member(i));
}

} // namespace sidonkit
