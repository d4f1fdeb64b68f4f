#include "sidonkit/construct.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sidonkit/digraph.hpp"
#include "sidonkit/rng.hpp"

namespace sidonkit {

Element pair_element(const FiniteGroup& factor, Element first, Element second)
{
    return first * factor.size() + second;
}

PairSet conjugacy_recipe(const FiniteGroup& g, Element pi, const ElementSet& base)
{
    if (base.empty()) throw std::invalid_argument("recipe needs a nonempty base set");
    if (!base.group().same_as(g) && base.group().order() != g.order())
        throw std::invalid_argument("base set belongs to another group");
    if (pi >= g.order()) throw std::out_of_range("pi out of range");
    PairSet ps;
    ps.factor = g;
    ps.group = direct_product(g, g);
    ps.pi = pi;
    ps.base = base.members();
    std::map<Element, std::uint64_t> conjugates;
    std::vector<Element> flat;
    for (auto a : ps.base) {
        ++conjugates[g.mul(g.mul(a, pi), g.inv(a))];
        flat.push_back(pair_element(g, a, g.mul(a, pi)));
    }
    for (const auto& [mu, c] : conjugates) ps.recipe_g = std::max(ps.recipe_g, c);
    ps.claimed_g = ps.recipe_g;
    ps.members = ElementSet(ps.group, std::move(flat));
    return ps;
}

PairSet sn_cross(std::uint32_t n, bool full, bool alternating)
{
    if (n < 3) throw std::invalid_argument("sn_cross needs n >= 3");
    const auto g = build_group((alternating ? "A:" : "S:") + std::to_string(n));
    // (1 2 ... n) for odd n, (1 2 ... n-1) for even n
    const std::uint32_t len = n % 2 ? n : n - 1;
    std::vector<std::uint32_t> img(n);
    std::iota(img.begin(), img.end(), 0u);
    for (std::uint32_t i = 0; i < len; ++i) img[i] = (i + 1) % len;
    const auto pi = g.from_permutation(Permutation(img));
    if (!pi) throw std::logic_error("canonical cycle is not in the group");
    std::vector<Element> base;
    for (Element a = 0; a < g.order(); ++a)
        if (full || g.to_permutation(a)(0) == 0) base.push_back(a);
    return conjugacy_recipe(g, *pi, ElementSet(g, std::move(base)));
}

PairSet class_recipe(const FiniteGroup& g, Element a)
{
    auto ps = conjugacy_recipe(g, a, conjugacy_class(g, a));
    ps.claimed_g = g.order() / ps.base.size();
    return ps;
}

void SquareMatrix01::set(std::size_t i, std::size_t j, bool v)
{
    if (i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
    if (n_ > 64) throw std::invalid_argument("matrix dimension above 64");
    if (v) rows_[i] |= std::uint64_t{1} << j;
    else rows_[i] &= ~(std::uint64_t{1} << j);
}

std::size_t SquareMatrix01::row_sum(std::size_t i) const { return static_cast<std::size_t>(std::popcount(rows_[i])); }

std::size_t SquareMatrix01::column_sum(std::size_t j) const
{
    std::size_t s = 0;
    for (std::size_t i = 0; i < n_; ++i) s += get(i, j);
    return s;
}

std::optional<std::size_t> SquareMatrix01::regular_sum() const
{
    if (n_ == 0) return 0;
    const auto s = row_sum(0);
    for (std::size_t i = 0; i < n_; ++i)
        if (row_sum(i) != s || column_sum(i) != s) return std::nullopt;
    return s;
}

SquareMatrix01 cayley_matrix(const ElementSet& a)
{
    const auto& g = a.group();
    SquareMatrix01 m(g.size());
    for (Element x = 0; x < g.order(); ++x)
        for (auto s : a.members()) m.set(x, g.mul(x, s));
    return m;
}

namespace {

// Two primes below 2^62; their product exceeds 30! comfortably.
constexpr std::uint64_t kPrimes[2] = {4611686018427387847ULL, 4611686018427387761ULL};

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

} // namespace

// per(M) = (-1)^n sum over column subsets S of (-1)^|S| prod_i (row i restricted to S),
// walking S in Gray-code order so each step flips one column.
BigInt ryser_permanent(const SquareMatrix01& m)
{
    const auto n = m.size();
    if (n > kPermanentCap) throw WorkCapExceeded("ryser_permanent: dimension above " + std::to_string(kPermanentCap));
    if (n == 0) return 1;
    std::vector<std::int64_t> sums(n, 0);
    const std::uint64_t subsets = std::uint64_t{1} << n;
    if (n <= 20) {
        __int128 total = 0;
        std::uint64_t gray = 0;
        for (std::uint64_t s = 1; s < subsets; ++s) {
            const auto j = static_cast<std::size_t>(std::countr_zero(s));
            const auto bit = std::uint64_t{1} << j;
            const std::int64_t delta = (gray & bit) ? -1 : 1;
            gray ^= bit;
            for (std::size_t i = 0; i < n; ++i)
                if (m.get(i, j)) sums[i] += delta;
            __int128 prod = 1;
            for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= sums[i];
            const bool odd = std::popcount(gray) % 2;
            total += odd ? -prod : prod;
        }
        if (n % 2) total = -total;
        BigInt out = 0;
        const bool neg = total < 0;
        unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-total) : static_cast<unsigned __int128>(total);
        out = static_cast<std::uint64_t>(mag >> 64);
        out <<= 64;
        out += static_cast<std::uint64_t>(mag);
        return neg ? BigInt(-out) : out;
    }
    // larger n: the same sum modulo two primes, then CRT (0 <= per <= n! < p1 p2)
    std::uint64_t residue[2] = {0, 0};
    std::uint64_t gray = 0;
    for (std::uint64_t s = 1; s < subsets; ++s) {
        const auto j = static_cast<std::size_t>(std::countr_zero(s));
        const auto bit = std::uint64_t{1} << j;
        const std::int64_t delta = (gray & bit) ? -1 : 1;
        gray ^= bit;
        for (std::size_t i = 0; i < n; ++i)
            if (m.get(i, j)) sums[i] += delta;
        const bool negative = (std::popcount(gray) + n) % 2;
        for (int t = 0; t < 2; ++t) {
            const auto p = kPrimes[t];
            std::uint64_t prod = 1;
            for (std::size_t i = 0; i < n && prod != 0; ++i) prod = mulmod(prod, static_cast<std::uint64_t>(sums[i]), p);
            residue[t] = negative ? (residue[t] + p - prod) % p : (residue[t] + prod) % p;
        }
    }
    const BigInt p1 = kPrimes[0], p2 = kPrimes[1];
    // x = r1 + p1 * ((r2 - r1) * p1^-1 mod p2)
    const BigInt inv = boost::multiprecision::powm(p1 % p2, p2 - 2, p2);
    BigInt diff = (BigInt(residue[1]) - residue[0]) % p2;
    if (diff < 0) diff += p2;
    return BigInt(residue[0]) + p1 * ((diff * inv) % p2);
}

Rational ef_bound(std::uint32_t n, std::uint32_t rowsum)
{
    if (rowsum < 1) throw std::invalid_argument("rowsum must be positive");
    if (n == 0) return 1;
    return Rational(power(BigInt(rowsum), n) * factorial(n), power(BigInt(n), n));
}

std::vector<Permutation> permanent_lift(const ElementSet& a, std::uint64_t max_outputs)
{
    const auto& g = a.group();
    const auto n = g.size();
    if (n > 12) throw WorkCapExceeded("permanent_lift is limited to groups of order 12");
    std::vector<Permutation> out;
    if (a.empty()) return out;
    std::vector<std::uint32_t> img(n);
    std::vector<bool> used(n, false);
    auto dfs = [&](auto&& self, Element x) -> void {
        if (x == n) {
            if (out.size() >= max_outputs) throw WorkCapExceeded("permanent_lift: too many permutations");
            out.emplace_back(img);
            return;
        }
        for (auto s : a.members()) {
            const auto y = g.mul(x, s);
            if (used[y]) continue;
            used[y] = true;
            img[x] = y;
            self(self, x + 1);
            used[y] = false;
        }
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end());
    return out;
}

HamiltonLift hamilton_lift(const UndirectedGraph& graph, unsigned k, std::uint64_t seed, std::uint64_t max_nodes)
{
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    const auto girth = graph_girth(graph);
    if (girth && *girth < 2 * k + 1)
        throw std::invalid_argument("graph girth " + std::to_string(*girth) + " is below 2k+1");
    HamiltonLift res;
    const auto edges = graph.edges();
    Rng rng(seed);
    res.orientation.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) res.orientation.push_back(rng.coin());
    auto forward = [&](Vertex u, Vertex v) {
        const auto key = std::make_pair(std::min(u, v), std::max(u, v));
        const auto idx = static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), key) - edges.begin());
        return res.orientation[idx] == (u < v);
    };
    const auto cycles = enumerate_undirected_hamilton_cycles(graph, max_nodes);
    res.hamilton_cycles = cycles.size();
    const auto n = graph.size();
    for (const auto& c : cycles) {
        for (int dir = 0; dir < 2; ++dir) {
            bool respected = true;
            std::vector<std::uint32_t> img(n);
            for (std::size_t i = 0; i < n && respected; ++i) {
                const auto u = dir ? c[(n - i) % n] : c[i];
                const auto v = dir ? c[(2 * n - i - 1) % n] : c[(i + 1) % n];
                respected = forward(u, v);
                img[u] = v;
            }
            if (respected) res.permutations.emplace_back(img);
        }
    }
    std::sort(res.permutations.begin(), res.permutations.end());
    return res;
}

bool is_valid_first_kind_base(const ElementSet& b)
{
    const auto& g = b.group();
    const auto& m = b.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (g.mul(m[i], m[i]) == g.mul(m[j], m[j])) return false;
            if (g.mul(m[i], m[j]) == g.mul(m[j], m[i])) return false;
        }
    return true;
}

namespace {

using Edge = std::vector<std::uint32_t>;  // sorted vertex positions

struct Census {
    std::vector<Edge> edges;
    std::map<unsigned, std::uint64_t> forms;
};

Edge make_edge(std::initializer_list<std::uint32_t> vs)
{
    Edge e(vs);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
}

// alpha beta = gamma delta over base positions, (alpha, beta) != (gamma, delta).
Census first_kind_census(const FiniteGroup& g, const std::vector<Element>& b)
{
    const auto n = static_cast<std::uint32_t>(b.size());
    std::map<Element, std::vector<std::pair<std::uint32_t, std::uint32_t>>> by_product;
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) by_product[g.mul(b[i], b[j])].emplace_back(i, j);
    Census c;
    std::set<Edge> seen;
    for (const auto& [mu, words] : by_product)
        for (const auto& [a, bb] : words)
            for (const auto& [cc, d] : words) {
                if (a == cc && bb == d) continue;
                auto e = make_edge({a, bb, cc, d});
                unsigned form;
                if (e.size() == 2) form = (a == bb) ? 1 : 2;           // a^2 = b^2 or ab = ba
                else if (e.size() == 3) form = (a == d || bb == cc) ? 3 : 4;  // ab = ca or a^2 = bc
                else form = 5;
                ++c.forms[form];
                if (seen.insert(e).second) c.edges.push_back(std::move(e));
            }
    return c;
}

// Cyclic alpha beta^-1 gamma delta^-1 = 1 with alpha != beta != gamma != delta != alpha.
Census second_kind_census(const FiniteGroup& g)
{
    const auto n = g.size();
    Census c;
    std::set<Edge> seen;
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            if (a == b) continue;
            const auto ab = g.mul(a, g.inv(b));
            for (Element cc = 0; cc < n; ++cc) {
                if (cc == b) continue;
                // delta = a b^-1 c
                const auto d = g.mul(ab, cc);
                if (d == cc || d == a) continue;
                auto e = make_edge({a, b, cc, d});
                ++c.forms[e.size() == 2 ? 1 : e.size() == 3 ? 2 : 3];
                if (seen.insert(e).second) c.edges.push_back(std::move(e));
            }
        }
    return c;
}

HypergraphProfile profile_from(std::uint32_t n, const Census& c)
{
    HypergraphProfile p;
    p.vertex_count = n;
    for (const auto& e : c.edges) ++p.edge_counts[static_cast<unsigned>(e.size())];
    p.form_counts = c.forms;
    p.f.assign(n + 1, Rational(0));
    for (std::uint32_t k = 0; k <= n; ++k) {
        Rational f = 0;
        for (const auto& [r, er] : p.edge_counts)
            if (r <= k) f += Rational(BigInt(er) * binomial(k, r), binomial(n, r));
        p.f[k] = f;
    }
    bool first = true;
    for (std::uint32_t k = 1; k <= n; ++k) {
        const Rational gain = Rational(k) - p.f[k];
        if (first || gain > p.gain) {
            p.gain = gain;
            p.k_star = k;
            first = false;
        }
    }
    const auto t = ceil(p.gain);
    p.target = t < 0 ? 0 : t.convert_to<std::uint64_t>();
    return p;
}

std::vector<Element> resolve_vertices(const FiniteGroup& g, SidonKind kind, const std::optional<ElementSet>& base)
{
    if (kind == SidonKind::First) {
        if (!base) throw std::invalid_argument("first kind needs a base set");
        if (!is_valid_first_kind_base(*base))
            throw std::invalid_argument("base set must have distinct squares and no commuting pairs");
        return base->members();
    }
    std::vector<Element> all(g.order());
    std::iota(all.begin(), all.end(), 0u);
    return all;
}

} // namespace

HypergraphProfile hypergraph_profile(const FiniteGroup& g, SidonKind kind, const std::optional<ElementSet>& base)
{
    const auto vertices = resolve_vertices(g, kind, base);
    const auto census = kind == SidonKind::First ? first_kind_census(g, vertices) : second_kind_census(g);
    return profile_from(static_cast<std::uint32_t>(vertices.size()), census);
}

ProbabilisticResult probabilistic_sidon(const FiniteGroup& g, SidonKind kind, const std::optional<ElementSet>& base,
                                        std::uint64_t seed, std::uint64_t max_attempts)
{
    const auto vertices = resolve_vertices(g, kind, base);
    const auto n = static_cast<std::uint32_t>(vertices.size());
    const auto census = kind == SidonKind::First ? first_kind_census(g, vertices) : second_kind_census(g);
    ProbabilisticResult res;
    res.profile = profile_from(n, census);
    res.set = ElementSet(g, {});
    if (n == 0) return res;
    std::vector<std::uint32_t> best;
    for (std::uint64_t attempt = 0; attempt < std::max<std::uint64_t>(max_attempts, 1); ++attempt) {
        Rng rng(mix_seed(seed, attempt));
        auto sample = rng.sample(n, res.profile.k_star);
        std::vector<bool> alive(n, false);
        for (auto v : sample) alive[v] = true;
        // delete the largest vertex of every edge that survives intact
        for (const auto& e : census.edges)
            if (std::all_of(e.begin(), e.end(), [&](auto v) { return alive[v]; })) alive[e.back()] = false;
        std::vector<std::uint32_t> kept;
        for (auto v : sample)
            if (alive[v]) kept.push_back(v);
        res.attempts = attempt + 1;
        if (attempt == 0 || kept.size() > best.size()) best = kept;
        if (kept.size() >= res.profile.target) {
            best = std::move(kept);
            break;
        }
    }
    res.budget_exhausted = best.size() < res.profile.target;
    std::vector<Element> members;
    for (auto v : best) members.push_back(vertices[v]);
    res.set = ElementSet(g, std::move(members));
    return res;
}

ElementSet anticommuting_base(std::uint32_t n)
{
    if (n < 4) throw std::invalid_argument("anticommuting_base needs n >= 4");
    const auto g = build_group("A:" + std::to_string(n));
    const std::uint32_t len = n % 2 ? n : n - 1;
    std::vector<bool> taken(g.order(), false);
    std::vector<Element> out;
    for (Element a = 0; a < g.order(); ++a) {
        if (taken[a]) continue;
        const auto p = g.to_permutation(a);
        const auto cs = p.cycles();
        if (cs.size() != 1 || cs[0].size() != len || (n % 2 == 0 && p(n - 1) != n - 1)) continue;
        // a is the least-index member of its cyclic subgroup's generators
        out.push_back(a);
        Element x = a;
        for (std::uint32_t e = 1; e <= len; ++e, x = g.mul(x, a))
            if (std::gcd(e, len) == 1) taken[x] = true;
    }
    ElementSet b(g, std::move(out));
    if (!is_valid_first_kind_base(b)) throw std::logic_error("anticommuting base failed its own check");
    return b;
}

std::vector<std::vector<std::uint32_t>> hash_shift_family(std::uint32_t t, std::uint32_t v)
{
    if (v < 3 || v > t) throw std::invalid_argument("need 3 <= v <= t");
    const auto mod = t - 1;
    std::vector<std::vector<std::uint32_t>> family;
    for (std::uint32_t s = 0; s < mod; ++s) {
        std::vector<std::uint32_t> set;
        for (std::uint32_t x = 1; x <= v - 2; ++x) set.push_back((x - 1 + s) % mod + 1);
        std::sort(set.begin(), set.end());
        family.push_back(std::move(set));
    }
    return family;
}

Rational hash_code_bound(std::uint32_t t, std::uint32_t v, std::uint32_t q, std::uint32_t n)
{
    if (v < 3 || v > t) throw std::invalid_argument("need 3 <= v <= t");
    if (q < 2) throw std::invalid_argument("need q >= 2");
    if (n % (t - 1) != 0) throw std::invalid_argument("hash_code_bound needs (t-1) | n");
    const auto exponent = n - (v - 2) * (n / (t - 1));
    return Rational(binomial(t, 2) * power(BigInt(q), exponent));
}

} // namespace sidonkit
