#include "sidonkit/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sidonkit/bigint.hpp"
#include "sidonkit/rng.hpp"

namespace sidonkit {

namespace {

constexpr std::uint64_t kTableCacheLimit = 1024;

std::optional<std::uint64_t> parse_uint(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) return std::nullopt;
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Split at top-level occurrences of sep.
std::vector<std::string> split_top(std::string_view text, char sep)
{
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(' || c == '[' || c == '<') ++depth;
        if (c == ')' || c == ']' || c == '>') --depth;
        if (c == sep && depth == 0) {
            parts.emplace_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.emplace_back(trim(cur));
    return parts;
}

class CyclicImpl final : public GroupImpl {
public:
    explicit CyclicImpl(std::uint64_t n) : n_(n) {}
    std::uint64_t order() const override { return n_; }
    Element mul(Element a, Element b) const override { return static_cast<Element>((std::uint64_t{a} + b) % n_); }
    Element inv(Element a) const override { return a == 0 ? 0 : static_cast<Element>(n_ - a); }
    std::string render(Element a) const override { return std::to_string(a); }
    std::optional<Element> parse(std::string_view text) const override
    {
        auto v = parse_uint(text);
        if (!v || *v >= n_) return std::nullopt;
        return static_cast<Element>(*v);
    }

private:
    std::uint64_t n_;
};

// S_n by lexicographic rank; A_n keeps the even member of each rank pair
// {2i, 2i+1} (the two differ by a final transposition), so index = rank / 2.
class SymmetricImpl final : public GroupImpl {
public:
    SymmetricImpl(std::size_t n, bool alternating) : n_(n), alternating_(alternating)
    {
        order_ = factorial(static_cast<unsigned>(n)).convert_to<std::uint64_t>();
        if (alternating_ && n_ >= 2) order_ /= 2;
    }
    std::uint64_t order() const override { return order_; }
    Element mul(Element a, Element b) const override { return encode(decode(a) * decode(b)); }
    Element inv(Element a) const override { return encode(decode(a).inverse()); }
    std::string render(Element a) const override { return decode(a).to_cycles(); }
    std::optional<Element> parse(std::string_view text) const override
    {
        try {
            auto p = Permutation::parse(text, n_);
            return from_permutation(p);
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }
    bool is_permutation_group() const override { return true; }
    std::size_t degree() const override { return n_; }
    Permutation to_permutation(Element a) const override { return decode(a); }
    std::optional<Element> from_permutation(const Permutation& p) const override
    {
        if (p.size() != n_) return std::nullopt;
        if (alternating_ && !p.is_even()) return std::nullopt;
        return encode(p);
    }

private:
    Permutation decode(Element a) const
    {
        if (!alternating_ || n_ < 2) return Permutation::unrank(n_, a);
        auto p = Permutation::unrank(n_, 2 * std::uint64_t{a});
        return p.is_even() ? p : Permutation::unrank(n_, 2 * std::uint64_t{a} + 1);
    }
    Element encode(const Permutation& p) const
    {
        const auto r = p.lex_rank();
        return static_cast<Element>(alternating_ && n_ >= 2 ? r / 2 : r);
    }

    std::size_t n_;
    bool alternating_;
    std::uint64_t order_ = 1;
};

class ProductImpl final : public GroupImpl {
public:
    ProductImpl(FiniteGroup g, FiniteGroup h) : g_(std::move(g)), h_(std::move(h)) {}
    std::uint64_t order() const override { return g_.order() * h_.order(); }
    Element mul(Element a, Element b) const override
    {
        const auto m = h_.size();
        return g_.mul(a / m, b / m) * m + h_.mul(a % m, b % m);
    }
    Element inv(Element a) const override
    {
        const auto m = h_.size();
        return g_.inv(a / m) * m + h_.inv(a % m);
    }
    std::string render(Element a) const override
    {
        const auto m = h_.size();
        return "<" + g_.render(a / m) + ";" + h_.render(a % m) + ">";
    }
    std::optional<Element> parse(std::string_view text) const override
    {
        text = trim(text);
        if (text.size() < 2 || text.front() != '<' || text.back() != '>') return std::nullopt;
        auto parts = split_top(text.substr(1, text.size() - 2), ';');
        if (parts.size() != 2) return std::nullopt;
        try {
            const auto x = g_.parse_element(parts[0]);
            const auto y = h_.parse_element(parts[1]);
            return x * h_.size() + y;
        } catch (const std::exception&) {
            return std::nullopt;
        }
    }

private:
    FiniteGroup g_, h_;
};

class TableImpl final : public GroupImpl {
public:
    explicit TableImpl(GroupTable t) : t_(std::move(t))
    {
        inv_.assign(t_.order, 0);
        for (Element a = 0; a < t_.order; ++a) {
            bool found = false;
            for (Element b = 0; b < t_.order && !found; ++b)
                if (t_.entries[static_cast<std::size_t>(a) * t_.order + b] == 0) {
                    inv_[a] = b;
                    found = true;
                }
            if (!found) throw std::invalid_argument("table: element without inverse");
        }
    }
    std::uint64_t order() const override { return t_.order; }
    Element mul(Element a, Element b) const override { return t_.entries[static_cast<std::size_t>(a) * t_.order + b]; }
    Element inv(Element a) const override { return inv_[a]; }
    std::string render(Element a) const override { return std::to_string(a); }
    std::optional<Element> parse(std::string_view text) const override
    {
        auto v = parse_uint(text);
        if (!v || *v >= t_.order) return std::nullopt;
        return static_cast<Element>(*v);
    }

private:
    GroupTable t_;
    std::vector<Element> inv_;
};

// GF(q), q = p^k, with elements encoded as base-p digit vectors (digit i is the
// coefficient of x^i) reduced modulo a fixed monic irreducible polynomial.
class PrimeField {
public:
    PrimeField(std::uint64_t p, std::uint32_t k) : p_(p), k_(k)
    {
        q_ = 1;
        for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
        find_modulus();
    }
    std::uint64_t size() const { return q_; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        auto x = digits(a), y = digits(b);
        std::vector<std::uint64_t> prod(2 * k_, 0);
        for (std::uint32_t i = 0; i < k_; ++i)
            for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
        // reduce using x^k = -sum modulus_[i] x^i
        for (std::uint32_t d = 2 * k_ - 1; d >= k_; --d) {
            const auto c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (std::uint32_t i = 0; i < k_; ++i)
                prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i]) * c) % p_;
        }
        prod.resize(k_);
        return encode(prod);
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const
    {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // least element (by encoding) of multiplicative order q - 1
    std::uint64_t primitive_element() const
    {
        const std::uint64_t n = q_ - 1;
        std::vector<std::uint64_t> primes;
        std::uint64_t m = n;
        for (std::uint64_t d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                primes.push_back(d);
                while (m % d == 0) m /= d;
            }
        if (m > 1) primes.push_back(m);
        for (std::uint64_t g = 1; g < q_; ++g) {
            bool ok = true;
            for (auto r : primes)
                if (pow(g, n / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) return g;
        }
        throw std::logic_error("field without primitive element");
    }

private:
    std::vector<std::uint64_t> digits(std::uint64_t a) const
    {
        std::vector<std::uint64_t> d(k_);
        for (std::uint32_t i = 0; i < k_; ++i) {
            d[i] = a % p_;
            a /= p_;
        }
        return d;
    }
    std::uint64_t encode(const std::vector<std::uint64_t>& d) const
    {
        std::uint64_t a = 0;
        for (std::uint32_t i = k_; i-- > 0;) a = a * p_ + d[i];
        return a;
    }

    // remainder of poly (low degree first) modulo monic divisor
    std::vector<std::uint64_t> poly_mod(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& monic) const
    {
        const std::size_t db = monic.size() - 1;
        for (std::size_t d = a.size(); d-- > db;) {
            const auto c = a[d] % p_;
            if (c == 0) continue;
            for (std::size_t i = 0; i <= db; ++i) a[d - db + i] = (a[d - db + i] + (p_ - c) * monic[i]) % p_;
        }
        a.resize(db);
        return a;
    }

    // Least monic irreducible of degree k, ordering the lower coefficients by
    // their base-p value. Irreducibility by trial division with monic factors.
    void find_modulus()
    {
        for (std::uint64_t c = 0; c < q_; ++c) {
            auto low = digits(c);
            std::vector<std::uint64_t> f(low);
            f.push_back(1);
            bool irreducible = true;
            for (std::uint32_t d = 1; d <= k_ / 2 && irreducible; ++d) {
                std::uint64_t count = 1;
                for (std::uint32_t i = 0; i < d; ++i) count *= p_;
                for (std::uint64_t fc = 0; fc < count && irreducible; ++fc) {
                    std::vector<std::uint64_t> g(d);
                    auto v = fc;
                    for (std::uint32_t i = 0; i < d; ++i) {
                        g[i] = v % p_;
                        v /= p_;
                    }
                    g.push_back(1);
                    auto r = poly_mod(f, g);
                    if (std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; })) irreducible = false;
                }
            }
            if (irreducible) {
                modulus_ = low;
                return;
            }
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    std::uint64_t p_;
    std::uint32_t k_;
    std::uint64_t q_ = 1;
    std::vector<std::uint64_t> modulus_;
};

// GF(p^k)^* extended by the Frobenius x -> x^p. The pair (g^a, F^i) has index
// a*k + i and (x, F^i)(y, F^j) = (x * F^i(y), F^(i+j)).
class OsImpl final : public GroupImpl {
public:
    OsImpl(std::uint64_t p, std::uint32_t k) : k_(k)
    {
        PrimeField field(p, k);
        n_ = field.size() - 1;
        const auto g = field.primitive_element();
        std::vector<std::uint64_t> power(n_), log(field.size(), 0);
        std::uint64_t x = 1;
        for (std::uint64_t a = 0; a < n_; ++a) {
            power[a] = x;
            log[x] = a;
            x = field.mul(x, g);
        }
        frob_.assign(k, std::vector<std::uint32_t>(n_));
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint64_t pi = 1;
            for (std::uint32_t t = 0; t < i; ++t) pi *= p;
            for (std::uint64_t b = 0; b < n_; ++b)
                frob_[i][b] = static_cast<std::uint32_t>(log[field.pow(power[b], pi)]);
        }
    }
    std::uint64_t order() const override { return n_ * k_; }
    Element mul(Element x, Element y) const override
    {
        const auto a = x / k_, i = x % k_, b = y / k_, j = y % k_;
        const auto c = (a + frob_[i][b]) % n_;
        return static_cast<Element>(c * k_ + (i + j) % k_);
    }
    Element inv(Element x) const override
    {
        const auto a = x / k_, i = x % k_;
        const auto j = (k_ - i) % k_;
        const auto neg = static_cast<std::uint32_t>((n_ - a) % n_);
        return static_cast<Element>(frob_[j][neg] * k_ + j);
    }
    std::string render(Element x) const override
    {
        return "(g^" + std::to_string(x / k_) + ",F^" + std::to_string(x % k_) + ")";
    }
    std::optional<Element> parse(std::string_view text) const override
    {
        text = trim(text);
        if (text.size() < 9 || text.substr(0, 3) != "(g^" || text.back() != ')') return std::nullopt;
        const auto comma = text.find(",F^");
        if (comma == std::string_view::npos) return std::nullopt;
        auto a = parse_uint(text.substr(3, comma - 3));
        auto i = parse_uint(text.substr(comma + 3, text.size() - comma - 4));
        if (!a || !i || *a >= n_ || *i >= k_) return std::nullopt;
        return static_cast<Element>(*a * k_ + *i);
    }

private:
    std::uint32_t k_;
    std::uint64_t n_ = 1;
    std::vector<std::vector<std::uint32_t>> frob_;
};

void check_cap(std::uint64_t order, std::uint64_t cap, std::string_view spec)
{
    if (order > cap)
        throw CapExceeded("group " + std::string(spec) + " has order " + std::to_string(order) +
                                    " above the cap " + std::to_string(cap));
}

std::uint64_t require_uint(std::string_view s, std::string_view what)
{
    auto v = parse_uint(s);
    if (!v) throw std::invalid_argument("bad " + std::string(what) + ": '" + std::string(s) + "'");
    return *v;
}

} // namespace

Permutation GroupImpl::to_permutation(Element) const
{
    throw std::logic_error("not a permutation group");
}

std::optional<Element> GroupImpl::from_permutation(const Permutation&) const { return std::nullopt; }

FiniteGroup::FiniteGroup(std::shared_ptr<const GroupImpl> impl, std::string label)
    : impl_(std::move(impl)), label_(std::move(label)), order_(impl_->order())
{
    if (order_ == 0) throw std::invalid_argument("empty group");
    if (order_ > UINT32_MAX) throw std::invalid_argument("group too large to index");
    if (order_ <= kTableCacheLimit) {
        table_.resize(order_ * order_);
        for (Element a = 0; a < order_; ++a)
            for (Element b = 0; b < order_; ++b) table_[a * order_ + b] = impl_->mul(a, b);
    }
    inverses_.resize(order_);
    for (Element a = 0; a < order_; ++a) inverses_[a] = impl_->inv(a);
}

Element FiniteGroup::multiply(Element a, Element b) const
{
    if (a >= order_ || b >= order_) throw std::out_of_range("element index out of range");
    return mul(a, b);
}

Element FiniteGroup::inverse(Element a) const
{
    if (a >= order_) throw std::out_of_range("element index out of range");
    return inv(a);
}

std::string FiniteGroup::render(Element a) const
{
    if (a >= order_) throw std::out_of_range("element index out of range");
    return impl_->render(a);
}

Element FiniteGroup::parse_element(std::string_view text) const
{
    text = trim(text);
    if (!text.empty() && text.front() == '#') {
        auto v = parse_uint(text.substr(1));
        if (!v || *v >= order_) throw std::invalid_argument("bad element index: " + std::string(text));
        return static_cast<Element>(*v);
    }
    if (auto e = impl_->parse(text)) return *e;
    throw std::invalid_argument("cannot parse element '" + std::string(text) + "' of " + label_);
}

ElementSet::ElementSet(FiniteGroup group, std::vector<Element> members)
    : group_(std::move(group)), members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.back() >= group_.order())
        throw std::out_of_range("set member out of range");
}

bool ElementSet::contains(Element a) const { return std::binary_search(members_.begin(), members_.end(), a); }

FiniteGroup group_from_table(GroupTable table, std::string label)
{
    if (table.order == 0) throw std::invalid_argument("table: order must be positive");
    if (table.entries.size() != std::size_t{table.order} * table.order)
        throw std::invalid_argument("table: wrong number of entries");
    for (auto e : table.entries)
        if (e >= table.order) throw std::invalid_argument("table: entry out of range");
    for (Element a = 0; a < table.order; ++a)
        if (table.entries[a] != a || table.entries[std::size_t{a} * table.order] != a)
            throw std::invalid_argument("table: index 0 is not the identity");
    return FiniteGroup(std::make_shared<TableImpl>(std::move(table)), std::move(label));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h)
{
    return FiniteGroup(std::make_shared<ProductImpl>(g, h), "prod(" + g.label() + "," + h.label() + ")");
}

FiniteGroup build_group(std::string_view spec, std::uint64_t order_cap)
{
    spec = trim(spec);
    const std::string label(spec);
    if (spec.substr(0, 5) == "prod(") {
        if (spec.back() != ')') throw std::invalid_argument("unterminated prod(...)");
        // os:<p>,<k> carries its own comma, so try every top-level split and
        // insist that exactly one of them parses.
        const auto body = spec.substr(5, spec.size() - 6);
        auto parts = split_top(body, ',');
        std::optional<std::pair<FiniteGroup, FiniteGroup>> found;
        std::string last_error = "prod needs exactly two factors";
        for (std::size_t cut = 1; cut < parts.size(); ++cut) {
            std::string left, right;
            for (std::size_t i = 0; i < parts.size(); ++i) (i < cut ? left : right) += (i == 0 || i == cut ? "" : ",") + parts[i];
            try {
                auto g = build_group(left, order_cap);
                auto h = build_group(right, order_cap);
                if (found) throw std::invalid_argument("ambiguous prod(...) spec");
                found.emplace(std::move(g), std::move(h));
            } catch (const std::invalid_argument& e) {
                if (std::string_view(e.what()) == "ambiguous prod(...) spec") throw;
                last_error = e.what();
            }
        }
        if (!found) throw std::invalid_argument(last_error);
        check_cap(found->first.order() * found->second.order(), order_cap, spec);
        return FiniteGroup(std::make_shared<ProductImpl>(found->first, found->second), label);
    }
    if (spec.substr(0, 6) == "table:") {
        auto t = read_group_table(std::string(spec.substr(6)));
        check_cap(t.order, order_cap, spec);
        return group_from_table(std::move(t), label);
    }
    if (spec.substr(0, 3) == "os:") {
        auto parts = split_top(spec.substr(3), ',');
        if (parts.size() != 2) throw std::invalid_argument("os spec is os:<p>,<k>");
        const auto p = require_uint(parts[0], "prime");
        const auto k = require_uint(parts[1], "degree");
        if (!is_prime(p)) throw std::invalid_argument("os: p must be prime");
        if (k < 2) throw std::invalid_argument("os: k must be at least 2");
        if ((p - 1) % k != 0) throw std::invalid_argument("os: k must divide p-1");
        BigInt q = power(BigInt(p), static_cast<unsigned>(k));
        BigInt order = (q - 1) * k;
        if (order > BigInt(order_cap)) check_cap(UINT64_MAX, order_cap, spec);
        return FiniteGroup(std::make_shared<OsImpl>(p, static_cast<std::uint32_t>(k)), label);
    }
    if (spec.size() >= 2 && spec[1] == ':') {
        const auto n = require_uint(spec.substr(2), "size");
        if (n == 0) throw std::invalid_argument("n must be at least 1");
        switch (spec[0]) {
        case 'Z':
            check_cap(n, order_cap, spec);
            return FiniteGroup(std::make_shared<CyclicImpl>(n), label);
        case 'S':
        case 'A': {
            const bool alt = spec[0] == 'A';
            if (n > 20) check_cap(UINT64_MAX, order_cap, spec);
            auto order = factorial(static_cast<unsigned>(n));
            if (alt && n >= 2) order /= 2;
            if (order > BigInt(order_cap)) check_cap(order.convert_to<std::uint64_t>(), order_cap, spec);
            return FiniteGroup(std::make_shared<SymmetricImpl>(n, alt), label);
        }
        default:
            break;
        }
    }
    throw std::invalid_argument("unrecognized group spec '" + label + "'");
}

GroupTable read_group_table(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open group table " + path);
    GroupTable t;
    std::uint64_t n = 0;
    if (!(in >> n) || n == 0 || n > 65536) throw std::invalid_argument("table: bad order line in " + path);
    t.order = static_cast<std::uint32_t>(n);
    t.entries.resize(n * n);
    for (auto& e : t.entries) {
        std::uint64_t v;
        if (!(in >> v)) throw std::invalid_argument("table: truncated file " + path);
        if (v >= n) throw std::invalid_argument("table: entry out of range in " + path);
        e = static_cast<Element>(v);
    }
    std::string extra;
    if (in >> extra) throw std::invalid_argument("table: trailing data in " + path);
    return t;
}

GroupTable full_table(const FiniteGroup& g)
{
    GroupTable t;
    t.order = g.size();
    t.entries.resize(std::size_t{t.order} * t.order);
    for (Element a = 0; a < t.order; ++a)
        for (Element b = 0; b < t.order; ++b) t.entries[std::size_t{a} * t.order + b] = g.mul(a, b);
    return t;
}

void write_group_table(const FiniteGroup& g, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    const auto t = full_table(g);
    out << t.order << '\n';
    for (Element a = 0; a < t.order; ++a) {
        for (Element b = 0; b < t.order; ++b) out << (b ? " " : "") << t.entries[std::size_t{a} * t.order + b];
        out << '\n';
    }
}

Element group_multiply(const FiniteGroup& g, Element a, Element b) { return g.multiply(a, b); }
Element group_inverse(const FiniteGroup& g, Element a) { return g.inverse(a); }

std::uint64_t element_order(const FiniteGroup& g, Element a)
{
    if (a >= g.order()) throw std::out_of_range("element index out of range");
    std::uint64_t t = 1;
    for (Element x = a; x != g.identity(); x = g.mul(x, a)) ++t;
    return t;
}

std::uint64_t count_involutions(const FiniteGroup& g)
{
    std::uint64_t c = 0;
    for (Element a = 1; a < g.order(); ++a)
        if (g.mul(a, a) == 0) ++c;
    return c;
}

ElementSet conjugacy_class(const FiniteGroup& g, Element a)
{
    if (a >= g.order()) throw std::out_of_range("element index out of range");
    std::vector<Element> out;
    out.reserve(g.order());
    for (Element x = 0; x < g.order(); ++x) out.push_back(g.mul(g.mul(x, a), g.inv(x)));
    return ElementSet(g, std::move(out));
}

std::vector<ElementSet> conjugacy_classes(const FiniteGroup& g)
{
    std::vector<ElementSet> classes;
    std::vector<bool> done(g.order(), false);
    for (Element a = 0; a < g.order(); ++a) {
        if (done[a]) continue;
        auto c = conjugacy_class(g, a);
        for (auto x : c.members()) done[x] = true;
        classes.push_back(std::move(c));
    }
    return classes;
}

bool is_abelian(const FiniteGroup& g)
{
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = a + 1; b < g.order(); ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

ElementSet point_stabilizer_subset(std::uint32_t n, bool alternating, std::uint32_t point)
{
    if (point < 1 || point > n) throw std::invalid_argument("point must lie in 1..n");
    if (alternating && n < 2) throw std::invalid_argument("alternating stabilizer needs n >= 2");
    auto g = build_group((alternating ? "A:" : "S:") + std::to_string(n));
    std::vector<Element> members;
    for (Element a = 0; a < g.order(); ++a)
        if (g.to_permutation(a)(point - 1) == point - 1) members.push_back(a);
    return ElementSet(g, std::move(members));
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<OsParameters> find_os_parameters(std::uint64_t n, std::uint32_t k)
{
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    // (p^k - 1) k <= n  iff  p^k <= floor(n / k) + 1
    const std::uint64_t limit = n / k + 1;
    for (std::uint64_t p = integer_root(limit, k); p >= 2; --p) {
        if (!is_prime(p) || (p - 1) % k != 0) continue;
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < k; ++i) q *= p;
        return OsParameters{p, (q - 1) * k};
    }
    return std::nullopt;
}

ElementSet generated_subgroup(const FiniteGroup& g, const std::vector<Element>& generators)
{
    std::vector<bool> in(g.order(), false);
    std::vector<Element> members{g.identity()}, frontier{g.identity()};
    in[0] = true;
    while (!frontier.empty()) {
        std::vector<Element> next;
        for (auto x : frontier)
            for (auto s : generators) {
                const auto y = g.mul(x, s);
                if (!in[y]) {
                    in[y] = true;
                    members.push_back(y);
                    next.push_back(y);
                }
            }
        frontier = std::move(next);
    }
    return ElementSet(g, std::move(members));
}

bool is_subgroup(const ElementSet& s)
{
    const auto& g = s.group();
    if (!s.contains(g.identity())) return false;
    for (auto a : s.members())
        for (auto b : s.members())
            if (!s.contains(g.mul(a, b))) return false;
    return true;
}

bool is_normal(const ElementSet& s)
{
    if (!is_subgroup(s)) return false;
    const auto& g = s.group();
    for (Element x = 0; x < g.order(); ++x)
        for (auto a : s.members())
            if (!s.contains(g.mul(g.mul(x, a), g.inv(x)))) return false;
    return true;
}

AxiomReport check_group_axioms(const FiniteGroup& g, std::uint64_t exhaustive_up_to, std::uint64_t samples,
                               std::uint64_t seed)
{
    AxiomReport r;
    const auto n = g.size();
    for (Element a = 0; a < n; ++a) {
        if (g.mul(a, 0) != a || g.mul(0, a) != a) r.identity = false;
        const auto b = g.inv(a);
        if (g.mul(a, b) != 0 || g.mul(b, a) != 0) r.inverses = false;
    }
    if (n <= exhaustive_up_to) {
        for (Element a = 0; a < n && r.associative; ++a)
            for (Element b = 0; b < n && r.associative; ++b) {
                const auto ab = g.mul(a, b);
                for (Element c = 0; c < n; ++c)
                    if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) {
                        r.associative = false;
                        break;
                    }
            }
    } else {
        r.exhaustive = false;
        Rng rng(seed);
        for (std::uint64_t t = 0; t < samples && r.associative; ++t) {
            const auto a = static_cast<Element>(rng.below(n));
            const auto b = static_cast<Element>(rng.below(n));
            const auto c = static_cast<Element>(rng.below(n));
            if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) r.associative = false;
        }
    }
    return r;
}

std::vector<std::string> split_element_list(std::string_view text)
{
    if (trim(text).empty()) return {};
    return split_top(text, ',');
}

ElementSet parse_element_set(const FiniteGroup& g, std::string_view text)
{
    std::vector<Element> members;
    for (const auto& item : split_element_list(text)) {
        if (item.empty()) throw std::invalid_argument("empty item in element list");
        members.push_back(g.parse_element(item));
    }
    return ElementSet(g, std::move(members));
}

} // namespace sidonkit
