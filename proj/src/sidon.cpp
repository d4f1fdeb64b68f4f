#include "sidonkit/sidon.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <unordered_map>

#include "sidonkit/bigint.hpp"

namespace sidonkit {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kSaturated - b ? kSaturated : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0) return 0;
    return a > kSaturated / b ? kSaturated : a * b;
}

std::uint64_t env_or(const char* name, std::uint64_t fallback)
{
    if (const char* v = std::getenv(name)) {
        char* end = nullptr;
        const auto parsed = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0' && parsed > 0) return parsed;
    }
    return fallback;
}

void require_k(unsigned k)
{
    if (k < 2) throw std::invalid_argument("k must be at least 2");
}

void require_work(std::uint64_t work, std::uint64_t cap, const char* what)
{
    if (work > cap)
        throw WorkCapExceeded(std::string(what) + ": work estimate " + std::to_string(work) + " exceeds cap " +
                              std::to_string(cap));
}

// layers[t][x] = number of t-letter words over `letters` with product x.
std::vector<std::vector<std::uint64_t>> word_layers(const FiniteGroup& g, const std::vector<Element>& letters,
                                                    unsigned k)
{
    std::vector<std::vector<std::uint64_t>> layers(k + 1, std::vector<std::uint64_t>(g.size(), 0));
    layers[0][g.identity()] = 1;
    for (unsigned t = 0; t < k; ++t) {
        const auto& cur = layers[t];
        auto& next = layers[t + 1];
        for (Element x = 0; x < g.size(); ++x) {
            if (cur[x] == 0) continue;
            for (auto a : letters) next[g.mul(x, a)] = sat_add(next[g.mul(x, a)], cur[x]);
        }
    }
    return layers;
}

// Lexicographically first `want` words of length k with product target.
void first_words(const FiniteGroup& g, const std::vector<Element>& letters,
                 const std::vector<std::vector<std::uint64_t>>& layers, unsigned k, Element target, Word& prefix,
                 std::vector<Word>& out, std::size_t want)
{
    if (prefix.size() == k) {
        out.push_back(prefix);
        return;
    }
    const auto remaining = k - prefix.size() - 1;
    for (auto a : letters) {
        const auto rest = g.mul(g.inv(a), target);
        if (layers[remaining][rest] == 0) continue;
        prefix.push_back(a);
        first_words(g, letters, layers, k, rest, prefix, out, want);
        prefix.pop_back();
        if (out.size() >= want) return;
    }
}

// Backward table for S_k' violations with a fixed first letter f.
// table[t][x * m + last] = number of ways to finish letters t..2k-1 from
// partial product x when the previous letter index was `last`.
struct PrimeTables {
    std::vector<std::vector<std::uint64_t>> table;
};

PrimeTables prime_tables(const FiniteGroup& g, const std::vector<Element>& letters, unsigned k, bool cyclic,
                         std::size_t first)
{
    const std::size_t m = letters.size(), n = g.size(), len = 2 * std::size_t{k};
    std::vector<Element> inverse(m);
    for (std::size_t i = 0; i < m; ++i) inverse[i] = g.inv(letters[i]);
    PrimeTables pt;
    pt.table.assign(len + 1, {});
    auto& last_layer = pt.table[len];
    last_layer.assign(n * m, 0);
    for (std::size_t last = 0; last < m; ++last)
        if (!cyclic || last != first) last_layer[g.identity() * m + last] = 1;
    for (std::size_t t = len; t-- > 1;) {
        const auto& next = pt.table[t + 1];
        auto& cur = pt.table[t];
        cur.assign(n * m, 0);
        const bool inverted = t % 2 == 1;
        for (Element x = 0; x < n; ++x) {
            for (std::size_t c = 0; c < m; ++c) {
                const auto y = g.mul(x, inverted ? inverse[c] : letters[c]);
                const auto v = next[y * m + c];
                if (v == 0) continue;
                for (std::size_t last = 0; last < m; ++last)
                    if (last != c) cur[x * m + last] = sat_add(cur[x * m + last], v);
            }
        }
    }
    return pt;
}

std::uint64_t power_saturated(std::uint64_t base, unsigned exp)
{
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

} // namespace

std::uint64_t default_max_words() { return env_or("SIDONKIT_MAX_WORDS", 100'000'000ULL); }
std::uint64_t default_max_nodes() { return env_or("SIDONKIT_MAX_NODES", 50'000'000ULL); }

const char* property_name(Property p) { return p == Property::Sk ? "Sk" : "SkPrime"; }

// Work is counted as DP transitions, k * |G| * |A|, which replaces the
// |A|^k enumeration; the cap applies to whichever is smaller.
VerifyReport check_sk(const ElementSet& a, unsigned k, std::uint64_t max_words)
{
    require_k(k);
    VerifyReport r;
    r.property = Property::Sk;
    r.k = k;
    if (a.empty()) return r;
    const auto& g = a.group();
    const auto& letters = a.members();
    const auto work = std::min(power_saturated(letters.size(), k), sat_mul(sat_mul(k, g.order()), letters.size()));
    require_work(work, max_words, "check_sk");

    const auto layers = word_layers(g, letters, k);
    const auto& top = layers[k];
    r.multiplicity = *std::max_element(top.begin(), top.end());
    r.holds = r.multiplicity <= 1;
    if (!r.holds) {
        const auto mu = static_cast<Element>(std::find_if(top.begin(), top.end(), [](auto c) { return c >= 2; }) -
                                             top.begin());
        Word prefix;
        std::vector<Word> words;
        first_words(g, letters, layers, k, mu, prefix, words, 2);
        r.witness_words = std::make_pair(words.at(0), words.at(1));
    }
    return r;
}

std::uint64_t sk_multiplicity(const ElementSet& a, unsigned k, std::uint64_t max_words)
{
    return check_sk(a, k, max_words).multiplicity;
}

VerifyReport check_sk_prime(const ElementSet& a, unsigned k, bool cyclic, std::uint64_t max_words)
{
    require_k(k);
    VerifyReport r;
    r.property = Property::SkPrime;
    r.k = k;
    r.cyclic = cyclic;
    const auto& letters = a.members();
    const std::size_t m = letters.size();
    if (m <= 1) return r;
    const auto& g = a.group();
    const auto dp_work = sat_mul(sat_mul(sat_mul(2 * std::uint64_t{k}, g.order()), m), sat_mul(m, m));
    require_work(std::min(power_saturated(m, 2 * k), dp_work), max_words, "check_sk_prime");

    std::uint64_t total = 0;
    for (std::size_t f = 0; f < m; ++f) {
        const auto pt = prime_tables(g, letters, k, cyclic, f);
        const auto count = pt.table[1][letters[f] * m + f];
        if (count == 0) continue;
        if (!r.witness_cycle) {
            Word w{letters[f]};
            Element x = letters[f];
            std::size_t last = f;
            for (std::size_t t = 1; t < 2 * std::size_t{k}; ++t) {
                for (std::size_t c = 0; c < m; ++c) {
                    if (c == last) continue;
                    const auto y = g.mul(x, t % 2 == 1 ? g.inv(letters[c]) : letters[c]);
                    if (pt.table[t + 1][y * m + c] == 0) continue;
                    w.push_back(letters[c]);
                    x = y;
                    last = c;
                    break;
                }
            }
            r.witness_cycle = std::move(w);
        }
        total = sat_add(total, count);
    }
    r.multiplicity = total;
    r.holds = total == 0;
    return r;
}

VerifyReport check_sk(std::span<const Permutation> perms, unsigned k, std::uint64_t max_words)
{
    require_k(k);
    VerifyReport r;
    r.property = Property::Sk;
    r.k = k;
    if (perms.empty()) return r;
    const auto n = perms[0].size();
    for (const auto& p : perms)
        if (p.size() != n) throw std::invalid_argument("permutations of different degrees");
    {
        std::vector<Permutation> sorted(perms.begin(), perms.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("duplicate permutation in set");
    }
    require_work(power_saturated(perms.size(), k), max_words, "check_sk");

    using Layer = std::unordered_map<Permutation, std::uint64_t, PermutationHash>;
    std::vector<Layer> layers(k + 1);
    layers[0][Permutation::identity(n)] = 1;
    for (unsigned t = 0; t < k; ++t)
        for (const auto& [x, c] : layers[t])
            for (const auto& a : perms) {
                auto& slot = layers[t + 1][x * a];
                slot = sat_add(slot, c);
            }

    const Permutation* worst = nullptr;
    for (const auto& [x, c] : layers[k])
        if (c > r.multiplicity || (c == r.multiplicity && worst && x < *worst)) {
            r.multiplicity = c;
            worst = &x;
        }
    r.holds = r.multiplicity <= 1;
    if (!r.holds) {
        // first two words in index order with product *worst
        std::vector<Word> found;
        Word prefix;
        auto count_at = [&](std::size_t len, const Permutation& p) -> std::uint64_t {
            auto it = layers[len].find(p);
            return it == layers[len].end() ? 0 : it->second;
        };
        auto dfs = [&](auto&& self, const Permutation& target) -> void {
            if (prefix.size() == k) {
                found.push_back(prefix);
                return;
            }
            const auto remaining = k - prefix.size() - 1;
            for (std::size_t i = 0; i < perms.size() && found.size() < 2; ++i) {
                const auto rest = perms[i].inverse() * target;
                if (count_at(remaining, rest) == 0) continue;
                prefix.push_back(static_cast<Element>(i));
                self(self, rest);
                prefix.pop_back();
            }
        };
        dfs(dfs, *worst);
        r.witness_words = std::make_pair(found.at(0), found.at(1));
    }
    return r;
}

bool witness_is_valid(const FiniteGroup& g, const VerifyReport& r)
{
    auto in_range = [&](const Word& w) {
        return std::all_of(w.begin(), w.end(), [&](Element x) { return x < g.order(); });
    };
    if (r.property == Property::Sk) {
        if (!r.witness_words) return r.holds;
        const auto& [u, v] = *r.witness_words;
        if (u.size() != r.k || v.size() != r.k || u == v || !in_range(u) || !in_range(v)) return false;
        Element pu = 0, pv = 0;
        for (auto x : u) pu = g.mul(pu, x);
        for (auto x : v) pv = g.mul(pv, x);
        return pu == pv && !r.holds;
    }
    if (!r.witness_cycle) return r.holds;
    const auto& w = *r.witness_cycle;
    if (w.size() != 2 * std::size_t{r.k} || !in_range(w)) return false;
    Element p = 0;
    for (std::size_t t = 0; t < w.size(); ++t) p = g.mul(p, t % 2 ? g.inv(w[t]) : w[t]);
    if (p != 0) return false;
    for (std::size_t t = 0; t + 1 < w.size(); ++t)
        if (w[t] == w[t + 1]) return false;
    if (r.cyclic && w.back() == w.front()) return false;
    return !r.holds;
}

namespace {

class Searcher {
public:
    Searcher(const FiniteGroup& g, unsigned k, std::uint64_t mult, bool prime, bool cyclic, SearchOptions opts)
        : g_(g), k_(k), mult_(mult), prime_(prime), cyclic_(cyclic), opts_(opts)
    {
        bound_ = prime ? g.order() : integer_root(sat_mul(mult, g.order()), k);
        bound_ = std::max<std::uint64_t>(bound_, 1);
    }

    SearchResult run()
    {
        std::vector<Element> cand;
        if (prime_ && !opts_.exclude_identity) {
            // translation invariance lets us assume the identity is a member
            cur_.push_back(g_.identity());
            for (Element d = 1; d < g_.order(); ++d)
                if (ok_with(d)) cand.push_back(d);
        } else {
            for (Element d = opts_.exclude_identity ? 1 : 0; d < g_.order(); ++d) cand.push_back(d);
        }
        dfs(cand);
        SearchResult r;
        r.value = best_.size();
        r.witness = ElementSet(g_, best_);
        r.nodes = nodes_;
        r.exact = !aborted_ && (!stopped_ || best_.size() >= bound_);
        r.budget_exhausted = aborted_;
        return r;
    }

private:
    bool ok_with(Element d)
    {
        cur_.push_back(d);
        const bool ok = prime_ ? prime_ok() : sk_ok();
        cur_.pop_back();
        return ok;
    }

    bool sk_ok()
    {
        const auto n = g_.size();
        layer_.assign(n, 0);
        layer_[0] = 1;
        for (unsigned t = 0; t < k_; ++t) {
            next_.assign(n, 0);
            for (Element x = 0; x < n; ++x) {
                if (layer_[x] == 0) continue;
                for (auto a : cur_) {
                    auto& slot = next_[g_.mul(x, a)];
                    slot = sat_add(slot, layer_[x]);
                    if (t + 1 == k_ && slot > mult_) return false;
                }
            }
            layer_.swap(next_);
        }
        return true;
    }

    bool prime_ok()
    {
        if (cur_.size() <= 1) return true;
        ElementSet s(g_, cur_);
        return check_sk_prime(s, k_, cyclic_, kSaturated).holds;
    }

    void dfs(const std::vector<Element>& cand)
    {
        if (++nodes_ > opts_.max_nodes) {
            aborted_ = true;
            return;
        }
        if (cur_.size() > best_.size()) {
            best_ = cur_;
            if (best_.size() >= bound_ || (opts_.stop_at && best_.size() >= opts_.stop_at)) {
                stopped_ = true;
                return;
            }
        }
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (cur_.size() + (cand.size() - i) <= best_.size()) break;
            cur_.push_back(cand[i]);
            std::vector<Element> next;
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (ok_with(cand[j])) next.push_back(cand[j]);
            dfs(next);
            cur_.pop_back();
            if (aborted_ || stopped_) return;
        }
    }

    const FiniteGroup& g_;
    unsigned k_;
    std::uint64_t mult_;
    bool prime_, cyclic_;
    SearchOptions opts_;
    std::uint64_t bound_ = 1;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false, stopped_ = false;
    std::vector<Element> cur_, best_;
    std::vector<std::uint64_t> layer_, next_;
};

} // namespace

SearchResult max_sk(const FiniteGroup& g, unsigned k, std::uint64_t multiplicity, SearchOptions opts)
{
    require_k(k);
    if (multiplicity < 1) throw std::invalid_argument("multiplicity bound g must be at least 1");
    return Searcher(g, k, multiplicity, false, true, opts).run();
}

SearchResult max_sk_prime(const FiniteGroup& g, unsigned k, bool cyclic, SearchOptions opts)
{
    require_k(k);
    return Searcher(g, k, 1, true, cyclic, opts).run();
}

} // namespace sidonkit
