#include "sidonkit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sidonkit {

Permutation::Permutation(std::size_t n) : images_(n)
{
    std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (auto x : images_) {
        if (x >= images_.size() || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = true;
    }
}

namespace {

std::vector<std::uint32_t> read_numbers(std::string_view body)
{
    std::vector<std::uint32_t> out;
    std::size_t i = 0;
    while (i < body.size()) {
        const char c = body[i];
        if (c == ' ' || c == ',' || c == '\t') {
            ++i;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad character in permutation: " + std::string(1, c));
        std::uint32_t v = 0;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
            v = v * 10 + static_cast<std::uint32_t>(body[i] - '0');
            if (v > 1000000) throw std::invalid_argument("point too large");
            ++i;
        }
        if (v == 0) throw std::invalid_argument("points are 1-indexed");
        out.push_back(v - 1);
    }
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

} // namespace

Permutation Permutation::parse(std::string_view text, std::size_t degree)
{
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty permutation");
    if (text == "e") return Permutation(degree);
    if (text.front() == '[') {
        if (text.back() != ']') throw std::invalid_argument("unterminated one-line permutation");
        auto images = read_numbers(text.substr(1, text.size() - 2));
        if (degree != 0 && images.size() != degree)
            throw std::invalid_argument("one-line permutation has wrong degree");
        return Permutation(std::move(images));
    }

    std::vector<std::vector<std::uint32_t>> cycles;
    std::size_t i = 0;
    std::uint32_t largest = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
        const auto close = text.find(')', i);
        if (close == std::string_view::npos) throw std::invalid_argument("unterminated cycle");
        auto cyc = read_numbers(text.substr(i + 1, close - i - 1));
        for (auto x : cyc) largest = std::max(largest, x + 1);
        cycles.push_back(std::move(cyc));
        i = close + 1;
    }
    const std::size_t n = degree == 0 ? largest : degree;
    if (largest > n) throw std::invalid_argument("cycle mentions a point beyond the degree");

    // Cycles compose right to left like any other product.
    Permutation result(n);
    for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
        const auto& cyc = *it;
        std::vector<std::uint32_t> img(n);
        std::iota(img.begin(), img.end(), 0u);
        for (std::size_t j = 0; j < cyc.size(); ++j) {
            if (std::count(cyc.begin(), cyc.end(), cyc[j]) != 1)
                throw std::invalid_argument("repeated point in a cycle");
            img[cyc[j]] = cyc[(j + 1) % cyc.size()];
        }
        result = Permutation(std::move(img)) * result;
    }
    return result;
}

Permutation Permutation::unrank(std::size_t n, std::uint64_t rank)
{
    if (n > 20) throw std::invalid_argument("unrank: degree above 20");
    std::vector<std::uint64_t> fact(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
    if (rank >= fact[n]) throw std::out_of_range("unrank: rank too large");
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0u);
    std::vector<std::uint32_t> images;
    images.reserve(n);
    for (std::size_t i = n; i-- > 0;) {
        const auto q = rank / fact[i];
        rank %= fact[i];
        images.push_back(pool[q]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const
{
    if (rhs.size() != size()) throw std::invalid_argument("degree mismatch in product");
    Permutation out;
    out.images_.resize(size());
    for (std::size_t x = 0; x < size(); ++x) out.images_[x] = images_[rhs.images_[x]];
    return out;
}

Permutation Permutation::inverse() const
{
    Permutation out;
    out.images_.resize(size());
    for (std::size_t x = 0; x < size(); ++x) out.images_[images_[x]] = static_cast<std::uint32_t>(x);
    return out;
}

bool Permutation::is_identity() const
{
    for (std::size_t x = 0; x < size(); ++x)
        if (images_[x] != x) return false;
    return true;
}

bool Permutation::is_even() const
{
    std::size_t transpositions = 0;
    for (const auto& c : cycles()) transpositions += c.size() - 1;
    return transpositions % 2 == 0;
}

std::uint64_t Permutation::order() const
{
    std::uint64_t result = 1;
    for (const auto& c : cycles()) result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
    return result;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const
{
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(size(), false);
    for (std::uint32_t start = 0; start < size(); ++start) {
        if (seen[start] || images_[start] == start) continue;
        std::vector<std::uint32_t> cyc;
        for (auto x = start; !seen[x]; x = images_[x]) {
            seen[x] = true;
            cyc.push_back(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::uint64_t Permutation::lex_rank() const
{
    const std::size_t n = size();
    if (n > 20) throw std::invalid_argument("lex_rank: degree above 20");
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (images_[j] < images_[i]) ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

std::string Permutation::to_cycles() const
{
    const auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << '(';
        for (std::size_t j = 0; j < c.size(); ++j) os << (j ? " " : "") << c[j] + 1;
        os << ')';
    }
    return os.str();
}

std::string Permutation::to_one_line() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < size(); ++j) os << (j ? " " : "") << images_[j] + 1;
    os << ']';
    return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept
{
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : p.images()) {
        h ^= x;
        h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
}

} // namespace sidonkit
