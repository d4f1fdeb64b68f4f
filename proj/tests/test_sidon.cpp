#include <doctest.h>

#include "oracle.hpp"
#include "sidonkit/bounds.hpp"
#include "sidonkit/construct.hpp"
#include "sidonkit/group_catalogue.hpp"
#include "sidonkit/rng.hpp"
#include "sidonkit/sidon.hpp"

using namespace sidonkit;

namespace {

ElementSet set_of(const FiniteGroup& g, const std::string& text) { return parse_element_set(g, text); }

ElementSet random_set(const FiniteGroup& g, std::uint32_t size, Rng& rng)
{
    auto pick = rng.sample(g.size(), std::min<std::uint32_t>(size, g.size()));
    return ElementSet(g, std::vector<Element>(pick.begin(), pick.end()));
}

} // namespace

TEST_CASE("check_sk examples")
{
    const auto z5 = build_group("Z:5");
    auto r = check_sk(set_of(z5, "0,1"), 2);
    CHECK(!r.holds);
    REQUIRE(r.witness_words);
    CHECK(r.witness_words->first == Word{0, 1});
    CHECK(r.witness_words->second == Word{1, 0});
    CHECK(witness_is_valid(z5, r));

    const auto s3 = build_group("S:3");
    r = check_sk(set_of(s3, "(1 2 3),(1 2)"), 2);
    CHECK(r.holds);
    CHECK(r.multiplicity == 1);

    for (unsigned k = 2; k <= 5; ++k) {
        r = check_sk(set_of(s3, "(1 2)"), k);
        CHECK(r.holds);
        CHECK(r.multiplicity == 1);
    }
    r = check_sk(ElementSet(s3, {}), 3);
    CHECK(r.holds);
    CHECK(r.multiplicity == 0);
    std::vector<Element> all(120);
    std::iota(all.begin(), all.end(), 0);
    CHECK_THROWS_AS(check_sk(ElementSet(build_group("S:5"), all), 4, 1000), CapExceeded);
}

TEST_CASE("sk_multiplicity examples")
{
    const auto ps = sn_cross(3, true, false);
    CHECK(sk_multiplicity(ps.members, 2) <= 3);
    CHECK(sk_multiplicity(ElementSet(build_group("Z:4"), {0, 1, 2, 3}), 2) == 4);
    CHECK(sk_multiplicity(ElementSet(build_group("Z:4"), {}), 2) == 0);
}

TEST_CASE("check_sk_prime examples")
{
    CHECK(check_sk_prime(set_of(build_group("Z:4"), "0,1"), 2).holds);
    const auto v = build_group("prod(Z:2,Z:2)");
    const auto r = check_sk_prime(set_of(v, "<0;0>,<1;0>"), 2);
    CHECK(!r.holds);
    REQUIRE(r.witness_cycle);
    CHECK(witness_is_valid(v, r));
    CHECK(check_sk_prime(ElementSet(v, {2}), 2).holds);
    CHECK(check_sk_prime(ElementSet(v, {}), 3).holds);
}

TEST_CASE("verifiers agree with word enumeration")
{
    Rng rng(7);
    for (const char* spec : {"Z:7", "Z:8", "S:3", "prod(Z:2,Z:4)", "A:4", "S:4", "os:3,2"}) {
        const auto g = build_group(spec);
        for (int trial = 0; trial < 40; ++trial) {
            const auto a = random_set(g, 1 + static_cast<std::uint32_t>(rng.below(5)), rng);
            for (unsigned k : {2u, 3u}) {
                CAPTURE(spec);
                CAPTURE(k);
                const auto m = oracle::sk_multiplicity(g, a.members(), k);
                const auto r = check_sk(a, k);
                CHECK(r.multiplicity == m);
                CHECK(r.holds == (m <= 1));
                if (!r.holds) CHECK(witness_is_valid(g, r));
                for (bool cyc : {true, false}) {
                    const auto bad = oracle::sk_prime_violations(g, a.members(), k, cyc);
                    const auto p = check_sk_prime(a, k, cyc);
                    CHECK(p.holds == (bad == 0));
                    CHECK(p.multiplicity == bad);
                    if (!p.holds) CHECK(witness_is_valid(g, p));
                }
            }
        }
    }
}

TEST_CASE("permutation overload matches the group verifier")
{
    const auto s4 = build_group("S:4");
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_set(s4, 2 + static_cast<std::uint32_t>(rng.below(4)), rng);
        std::vector<Permutation> perms;
        for (auto x : a.members()) perms.push_back(s4.to_permutation(x));
        for (unsigned k : {2u, 3u}) {
            const auto r1 = check_sk(a, k), r2 = check_sk(perms, k);
            CHECK(r1.holds == r2.holds);
            CHECK(r1.multiplicity == r2.multiplicity);
        }
    }
}

TEST_CASE("max_sk examples")
{
    for (const char* spec : {"Z:2", "Z:9", "prod(Z:2,Z:4)"}) CHECK(max_sk(build_group(spec), 2).value == 1);
    const auto s3 = max_sk(build_group("S:3"), 2);
    CHECK(s3.value == 2);
    CHECK(s3.exact);
    CHECK(check_sk(s3.witness, 2).holds);
    const auto big = build_group("prod(S:3,S:3)");
    const auto r = max_sk(big, 2);
    CHECK(r.value >= 2);
    CHECK(check_sk(r.witness, 2).holds);
    // the explicit construction lives in the same group and is an S_2-set of size 2
    const auto ps = sn_cross(3, false, false);
    CHECK(ps.members.size() == 2);
    CHECK(check_sk(ElementSet(big, ps.members.members()), 2).holds);
    CHECK(max_sk(build_group("Z:1"), 2).value == 1);
}

TEST_CASE("max_sk_prime examples")
{
    const auto r = max_sk_prime(build_group("Z:7"), 2);
    CHECK(r.value == 3);
    CHECK(check_sk_prime(r.witness, 2).holds);
    CHECK(max_sk_prime(build_group("prod(Z:2,Z:2)"), 3).value <= 2);
    CHECK(max_sk_prime(build_group("Z:1"), 2).value == 1);
}

TEST_CASE("searches agree with subset enumeration")
{
    for (const char* spec : {"Z:6", "Z:8", "S:3", "Z:10", "prod(Z:2,Z:4)", "A:4", "Z:13"}) {
        const auto g = build_group(spec);
        for (unsigned k : {2u, 3u}) {
            CAPTURE(spec);
            CAPTURE(k);
            const auto want_sk = oracle::max_hereditary(g.size(), [&](const auto& a) { return oracle::sk_within(g, a, k, 1); });
            const auto want_g2 = oracle::max_hereditary(g.size(), [&](const auto& a) { return oracle::sk_within(g, a, k, 2); });
            const auto want_p = oracle::max_hereditary(g.size(), [&](const auto& a) { return oracle::sk_prime_holds(g, a, k, true); });
            CHECK(max_sk(g, k).value == want_sk);
            CHECK(max_sk(g, k, 2).value == want_g2);
            CHECK(max_sk_prime(g, k).value == want_p);
        }
    }
}

TEST_CASE("search budget is reported, not hidden")
{
    SearchOptions opts;
    opts.max_nodes = 5;
    const auto r = max_sk_prime(build_group("Z:31"), 2, true, opts);
    CHECK(r.budget_exhausted);
    CHECK(!r.exact);
    CHECK(check_sk_prime(r.witness, 2).holds);
    opts = {};
    opts.stop_at = 2;
    const auto s = max_sk(build_group("S:4"), 2, 1, opts);
    CHECK(s.value == 2);
    CHECK(!s.exact);
}

TEST_CASE("translation invariance of S_k'")
{
    Rng rng(11);
    for (const char* spec : {"S:4", "Z:12", "prod(S:3,Z:2)", "os:3,2"}) {
        const auto g = build_group(spec);
        int tried = 0;
        for (int trial = 0; trial < 400 && tried < 100; ++trial) {
            const auto a = random_set(g, 2 + static_cast<std::uint32_t>(rng.below(3)), rng);
            if (!check_sk_prime(a, 2).holds) continue;
            ++tried;
            const auto gamma = static_cast<Element>(rng.below(g.order()));
            std::vector<Element> moved;
            for (auto x : a.members()) moved.push_back(g.mul(gamma, x));
            CHECK(check_sk_prime(ElementSet(g, moved), 2).holds);
        }
        CHECK(tried > 10);
    }
}

TEST_CASE("S_k sets are S_l sets for smaller l")
{
    for (const char* spec : {"S:3", "S:4", "A:4", "prod(S:3,Z:2)"}) {
        const auto g = build_group(spec);
        for (unsigned k : {3u, 4u}) {
            const auto r = max_sk(g, k);
            for (unsigned l = 2; l <= k; ++l) CHECK(check_sk(r.witness, l).holds);
        }
    }
}

TEST_CASE("direct products of S_k sets")
{
    const auto g1 = build_group("S:3"), g2 = build_group("A:4");
    const auto a1 = max_sk(g1, 2).witness, a2 = max_sk(g2, 2).witness;
    const auto p = build_group("prod(S:3,A:4)");
    std::vector<Element> prod;
    for (auto x : a1.members())
        for (auto y : a2.members()) prod.push_back(x * g2.size() + y);
    CHECK(check_sk(ElementSet(p, prod), 2).holds);
}

TEST_CASE("bound report examples")
{
    auto r = upper_bound_report(build_group("Z:6"), 2);
    const auto* oc = r.find("order_census");
    REQUIRE(oc);
    CHECK(oc->applicable);
    CHECK(oc->value == 5);
    CHECK(oc->inputs.at("m_k") == "1");
    CHECK(oc->inputs.at("n_k") == "4");
    CHECK(r.find("trivial")->value == 2);

    r = upper_bound_report(build_group("S:4"), 3);
    const auto* sp = r.find("skprime_subgroup");
    REQUIRE(sp);
    CHECK(sp->applicable);
    CHECK(sp->value <= 12);
    CHECK(sp->bounds == "M_k'");

    r = upper_bound_report(build_group("prod(Z:2,Z:2)"), 2);
    CHECK(r.find("trivial")->value == 2);
    CHECK(r.find("dimovski_strict")->value == 1);
}

TEST_CASE("coset square bound agrees with exhaustive assignment")
{
    // all (x_1..x_c) with x_1 <= 1 and sum of squares <= cap
    std::function<std::uint64_t(std::uint64_t, std::uint64_t, bool)> best = [&](std::uint64_t c, std::uint64_t cap, bool first) -> std::uint64_t {
        if (c == 0) return 0;
        std::uint64_t top = 0;
        for (std::uint64_t x = 0; x * x <= cap && (!first || x <= 1); ++x) top = std::max(top, x + best(c - 1, cap - x * x, false));
        return top;
    };
    for (std::uint64_t c = 1; c <= 5; ++c)
        for (std::uint64_t cap = 0; cap <= 30; ++cap) CHECK(coset_square_bound(c, cap) == best(c, cap, true));
}
