#include "sidonkit/bounds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sidonkit/bigint.hpp"

namespace sidonkit {

namespace {

constexpr std::uint64_t kExhaustiveSubgroupOrder = 64;

bool commutes_with_all(const FiniteGroup& g, Element y, const std::vector<Element>& members)
{
    for (auto x : members)
        if (g.mul(x, y) != g.mul(y, x)) return false;
    return true;
}

bool all_squares_in(const FiniteGroup& g, const ElementSet& h)
{
    for (Element x = 0; x < g.order(); ++x)
        if (!h.contains(g.mul(x, x))) return false;
    return true;
}

unsigned log2_exact(std::uint64_t v)
{
    unsigned d = 0;
    while ((std::uint64_t{1} << d) < v) ++d;
    return (std::uint64_t{1} << d) == v ? d : ~0u;
}

} // namespace

const BoundEntry* BoundReport::find(const std::string& name) const
{
    for (const auto& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

std::optional<std::uint64_t> BoundReport::best(const std::string& what) const
{
    std::optional<std::uint64_t> out;
    for (const auto& e : entries)
        if (e.applicable && e.bounds == what) out = out ? std::min(*out, e.value) : e.value;
    return out;
}

std::vector<ElementSet> abelian_subgroups(const FiniteGroup& g)
{
    std::set<std::vector<Element>> seen;
    std::vector<std::vector<Element>> queue;
    for (Element x = 0; x < g.order(); ++x) {
        auto c = generated_subgroup(g, {x}).members();
        if (seen.insert(c).second) queue.push_back(c);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const auto h = queue[i];
        for (Element y = 0; y < g.order(); ++y) {
            if (std::binary_search(h.begin(), h.end(), y) || !commutes_with_all(g, y, h)) continue;
            auto gens = h;
            gens.push_back(y);
            auto bigger = generated_subgroup(g, gens).members();
            if (seen.insert(bigger).second) queue.push_back(std::move(bigger));
        }
    }
    std::vector<ElementSet> out;
    for (auto& members : seen) out.emplace_back(g, members);
    return out;
}

std::uint64_t coset_square_bound(std::uint64_t cosets, std::uint64_t capacity)
{
    if (cosets == 0) return 0;
    std::uint64_t best = 0;
    for (std::uint64_t x1 = 0; x1 <= 1 && x1 * x1 <= capacity; ++x1) {
        const std::uint64_t rest = capacity - x1 * x1, c = cosets - 1;
        if (c == 0) {
            best = std::max(best, x1);
            continue;
        }
        // For a fixed total s the least sum of squares spreads s evenly over
        // the c remaining cosets; that minimum grows with s.
        auto min_squares = [c](std::uint64_t s) {
            const std::uint64_t q = s / c, r = s % c;
            return (c - r) * q * q + r * (q + 1) * (q + 1);
        };
        std::uint64_t lo = 0, hi = c * (integer_root(rest, 2) + 1);
        while (lo < hi) {
            const auto mid = lo + (hi - lo + 1) / 2;
            if (min_squares(mid) <= rest) lo = mid;
            else hi = mid - 1;
        }
        best = std::max(best, x1 + lo);
    }
    return best;
}

BoundReport upper_bound_report(const FiniteGroup& g, unsigned k, std::uint64_t multiplicity,
                               const std::optional<std::vector<ElementSet>>& known_subgroups)
{
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    const auto n = g.order();
    BoundReport rep;
    rep.order = n;
    rep.k = k;
    rep.g = multiplicity;
    const std::string kk = std::to_string(k);

    {
        BoundEntry e{"trivial", integer_root(n, k), true, "M_k", {{"order", std::to_string(n)}, {"k", kk}}};
        rep.entries.push_back(e);
    }
    {
        BoundEntry e{"trivial_g", integer_root(n * multiplicity, k), true, "M_k,g",
                     {{"order", std::to_string(n)}, {"k", kk}, {"g", std::to_string(multiplicity)}}};
        rep.entries.push_back(e);
    }
    {
        // strict inequality M_k < |G|^(1/k): subtract one exactly when the root is an integer
        const auto r = integer_root(n, k);
        BoundEntry e{"dimovski_strict", is_perfect_power(n, k) ? r - 1 : r, n > 1, "M_k",
                     {{"order", std::to_string(n)}, {"k", kk}}};
        rep.entries.push_back(e);
    }

    std::vector<ElementSet> subgroups;
    std::string source;
    if (known_subgroups) {
        for (const auto& h : *known_subgroups) {
            if (!h.group().same_as(g) && h.group().order() != n)
                throw std::invalid_argument("known subgroup belongs to another group");
            ElementSet hs(g, h.members());
            if (!is_subgroup(hs)) throw std::invalid_argument("supplied set is not a subgroup");
            bool abelian = true;
            for (auto x : hs.members())
                if (!commutes_with_all(g, x, hs.members())) abelian = false;
            if (abelian) subgroups.push_back(hs);
        }
        source = "supplied";
    } else if (n <= kExhaustiveSubgroupOrder) {
        subgroups = abelian_subgroups(g);
        source = "exhaustive";
    } else {
        source = "none (order above exhaustive range)";
    }

    {
        BoundEntry e{"index2_abelian", 0, false, "M_k", {{"subgroups", source}, {"k", kk}}};
        for (const auto& h : subgroups)
            if (h.size() * 2 == n) {
                e.applicable = true;
                e.value = 1 + integer_root(n / 2, k);
                e.inputs["subgroup_order"] = std::to_string(h.size());
                break;
            }
        rep.entries.push_back(e);
    }
    {
        BoundEntry e{"z2d_quotient", 0, false, "M_k", {{"subgroups", source}, {"k", kk}}};
        if (k == 2) {
            for (const auto& h : subgroups) {
                const auto index = n / h.size();
                const auto d = log2_exact(index);
                if (d == ~0u || !is_normal(h) || !all_squares_in(g, h)) continue;
                const auto v = coset_square_bound(index, h.size());
                if (!e.applicable || v < e.value) {
                    e.applicable = true;
                    e.value = v;
                    e.inputs["subgroup_order"] = std::to_string(h.size());
                    e.inputs["d"] = std::to_string(d);
                }
            }
        }
        rep.entries.push_back(e);
    }
    {
        BoundEntry e{"skprime_subgroup", 0, false, "M_k'", {{"subgroups", source}, {"k", kk}}};
        if (k >= 3) {
            for (const auto& h : subgroups) {
                const auto v = (n / h.size()) * (k - 1);
                if (!e.applicable || v < e.value) {
                    e.applicable = true;
                    e.value = v;
                    e.inputs["index"] = std::to_string(n / h.size());
                }
            }
        }
        rep.entries.push_back(e);
    }
    {
        std::vector<bool> has_order(k + 1, false);
        std::uint64_t big = 0;
        for (Element x = 0; x < n; ++x) {
            const auto o = element_order(g, x);
            if (o > k) ++big;
            else has_order[o] = true;
        }
        std::uint64_t small = 0;
        for (unsigned l = 2; l <= k; ++l) small += has_order[l];
        // the count argument needs a non-identity element; the trivial group has M_k = 1
        BoundEntry e{"order_census", small + big, n > 1, "M_k",
                     {{"m_k", std::to_string(small)}, {"n_k", std::to_string(big)}, {"k", kk}}};
        rep.entries.push_back(e);
    }
    return rep;
}

} // namespace sidonkit
