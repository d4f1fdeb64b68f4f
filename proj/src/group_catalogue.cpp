#include "sidonkit/group_catalogue.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace sidonkit {

namespace {

std::uint64_t upow(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    for (std::uint64_t i = 0; i < e; ++i) r = r * b % m;
    return r;
}

FiniteGroup tabulate(std::uint32_t order, const std::function<Element(Element, Element)>& law, std::string label)
{
    GroupTable t;
    t.order = order;
    t.entries.resize(std::size_t{order} * order);
    for (Element a = 0; a < order; ++a)
        for (Element b = 0; b < order; ++b) t.entries[std::size_t{a} * order + b] = law(a, b);
    auto g = group_from_table(std::move(t), label);
    if (!check_group_axioms(g).ok()) throw std::logic_error("catalogue group fails axioms: " + label);
    return g;
}

FiniteGroup as_table(const FiniteGroup& g, std::string label) { return group_from_table(full_table(g), std::move(label)); }

FiniteGroup product(std::string_view a, std::string_view b, std::string label)
{
    return as_table(direct_product(build_group(a), build_group(b)), std::move(label));
}

// (Z4 x Z2) extended by an involutive automorphism phi; base element (i, j)
// has index 2i + j, and (x, s) sits at index 2x + s.
FiniteGroup z4z2_extension(const std::function<Element(Element)>& phi, std::string label)
{
    auto base = [](Element x, Element y) {
        const Element i = (x / 2 + y / 2) % 4, j = (x % 2 + y % 2) % 2;
        return 2 * i + j;
    };
    return tabulate(
        16,
        [&](Element u, Element v) {
            const Element x = u / 2, s = u % 2, y = v / 2, t = v % 2;
            const Element y2 = s ? phi(y) : y;
            return 2 * base(x, y2) + (s + t) % 2;
        },
        std::move(label));
}

} // namespace

FiniteGroup metacyclic_group(std::uint32_t m, std::uint32_t n, std::uint32_t t, std::uint32_t r, std::string label)
{
    if (upow(r, n, m) != 1 % m || (std::uint64_t{t} * r) % m != t % m)
        throw std::invalid_argument("inconsistent metacyclic parameters");
    return tabulate(
        m * n,
        [=](Element x, Element y) {
            const std::uint64_t i = x / n, j = x % n, k = y / n, l = y % n;
            std::uint64_t e = i + k * upow(r, j, m);
            if (j + l >= n) e += t;
            return static_cast<Element>((e % m) * n + (j + l) % n);
        },
        std::move(label));
}

std::vector<CatalogueEntry> small_group_catalogue()
{
    std::vector<CatalogueEntry> out;
    auto add = [&](std::string name, FiniteGroup g) { out.push_back({std::move(name), std::move(g)}); };
    auto cyclic = [](std::uint32_t n) { return as_table(build_group("Z:" + std::to_string(n)), "Z" + std::to_string(n)); };

    add("01_01_Z1", cyclic(1));
    add("02_01_Z2", cyclic(2));
    add("03_01_Z3", cyclic(3));
    add("04_01_Z4", cyclic(4));
    add("04_02_Z2xZ2", product("Z:2", "Z:2", "Z2xZ2"));
    add("05_01_Z5", cyclic(5));
    add("06_01_S3", as_table(build_group("S:3"), "S3"));
    add("06_02_Z6", cyclic(6));
    add("07_01_Z7", cyclic(7));
    add("08_01_Z8", cyclic(8));
    add("08_02_Z4xZ2", product("Z:4", "Z:2", "Z4xZ2"));
    add("08_03_D4", metacyclic_group(4, 2, 0, 3, "D4"));
    add("08_04_Q8", metacyclic_group(4, 2, 2, 3, "Q8"));
    add("08_05_Z2xZ2xZ2", product("Z:2", "prod(Z:2,Z:2)", "Z2xZ2xZ2"));
    add("09_01_Z9", cyclic(9));
    add("09_02_Z3xZ3", product("Z:3", "Z:3", "Z3xZ3"));
    add("10_01_D5", metacyclic_group(5, 2, 0, 4, "D5"));
    add("10_02_Z10", cyclic(10));
    add("11_01_Z11", cyclic(11));
    add("12_01_Dic3", metacyclic_group(6, 2, 3, 5, "Dic3"));
    add("12_02_Z12", cyclic(12));
    add("12_03_A4", as_table(build_group("A:4"), "A4"));
    add("12_04_D6", metacyclic_group(6, 2, 0, 5, "D6"));
    add("12_05_Z6xZ2", product("Z:6", "Z:2", "Z6xZ2"));
    add("13_01_Z13", cyclic(13));
    add("14_01_D7", metacyclic_group(7, 2, 0, 6, "D7"));
    add("14_02_Z14", cyclic(14));
    add("15_01_Z15", cyclic(15));
    add("16_01_Z16", cyclic(16));
    add("16_02_Z4xZ4", product("Z:4", "Z:4", "Z4xZ4"));
    // a -> ab, b -> b on Z4 x Z2 = <a> x <b>
    add("16_03_Z2xZ2_Z4", z4z2_extension([](Element y) { return 2 * (y / 2) + (y % 2 + y / 2) % 2; }, "(Z4xZ2):Z2"));
    add("16_04_Z4_Z4", metacyclic_group(4, 4, 0, 3, "Z4:Z4"));
    add("16_05_Z8xZ2", product("Z:8", "Z:2", "Z8xZ2"));
    add("16_06_M16", metacyclic_group(8, 2, 0, 5, "M16"));
    add("16_07_D8", metacyclic_group(8, 2, 0, 7, "D8"));
    add("16_08_SD16", metacyclic_group(8, 2, 0, 3, "SD16"));
    add("16_09_Q16", metacyclic_group(8, 2, 4, 7, "Q16"));
    add("16_10_Z4xZ2xZ2", product("Z:4", "prod(Z:2,Z:2)", "Z4xZ2xZ2"));
    add("16_11_D4xZ2", as_table(direct_product(metacyclic_group(4, 2, 0, 3, "D4"), build_group("Z:2")), "D4xZ2"));
    add("16_12_Q8xZ2", as_table(direct_product(metacyclic_group(4, 2, 2, 3, "Q8"), build_group("Z:2")), "Q8xZ2"));
    // a -> a, b -> a^2 b: the Pauli group Z4 o D4
    add("16_13_Pauli", z4z2_extension([](Element y) { return 2 * ((y / 2 + 2 * (y % 2)) % 4) + y % 2; }, "Pauli"));
    add("16_14_Z2^4", product("prod(Z:2,Z:2)", "prod(Z:2,Z:2)", "Z2^4"));
    return out;
}

std::vector<std::uint64_t> group_invariants(const FiniteGroup& g)
{
    const auto n = g.size();
    std::vector<std::uint64_t> inv{n, is_abelian(g) ? 1u : 0u, conjugacy_classes(g).size()};
    // (element order, centralizer size) census
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> census;
    std::vector<bool> is_square(n, false);
    std::uint64_t center = 0;
    for (Element a = 0; a < n; ++a) {
        std::uint64_t cent = 0;
        for (Element b = 0; b < n; ++b)
            if (g.mul(a, b) == g.mul(b, a)) ++cent;
        if (cent == n) ++center;
        ++census[{element_order(g, a), cent}];
        is_square[g.mul(a, a)] = true;
    }
    inv.push_back(center);
    inv.push_back(static_cast<std::uint64_t>(std::count(is_square.begin(), is_square.end(), true)));
    for (const auto& [key, count] : census) {
        inv.push_back(key.first);
        inv.push_back(key.second);
        inv.push_back(count);
    }
    return inv;
}

} // namespace sidonkit
