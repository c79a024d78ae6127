#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gca/config.hpp"

using namespace gca;

namespace {

const Alphabet q2{2};

// All subgroups of a small group, by filtering subsets.
std::vector<std::vector<Elem>> all_subgroups(const FiniteGroup& g) {
    std::vector<std::vector<Elem>> out;
    const int n = g.order();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Elem> set;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                set.push_back(i);
        if (is_subgroup(g, set))
            out.push_back(std::move(set));
    }
    return out;
}

// Right cosets of K in G.
std::size_t coset_count(const FiniteGroup& g, const std::vector<Elem>& k) {
    std::set<std::set<Elem>> cosets;
    for (Elem h = 0; h < g.order(); ++h) {
        std::set<Elem> coset;
        for (Elem e : k)
            coset.insert(g.mul(e, h));
        cosets.insert(std::move(coset));
    }
    return cosets.size();
}

} // namespace

TEST_CASE("alphabet and configuration validation") {
    CHECK_THROWS_AS(Alphabet(1), StructuralError);
    const FiniteGroup z3 = build_cyclic(3);
    CHECK_THROWS_AS(Config(z3, q2, {0, 1}), StructuralError);
    CHECK_THROWS_AS(Config(z3, q2, {0, 1, 2}), StructuralError);
}

TEST_CASE("shift action") {
    const FiniteGroup z3 = build_cyclic(3);
    const Config x(z3, q2, {0, 1, 1});

    CHECK(shift(0, x) == x);
    // (1.x)(h) = x(h - 1): the tuple rotates right.
    CHECK(shift(1, x).symbols() == std::vector<int>{1, 0, 1});
    CHECK(shift(2, x).symbols() == std::vector<int>{1, 1, 0});

    // Action axioms, exhaustive over Z4 and S3 at q = 2.
    for (const FiniteGroup& g : {build_cyclic(4), build_symmetric(3)}) {
        for (const Config& c : enumerate_configs(g, q2)) {
            CHECK(shift(0, c) == c);
            for (Elem a = 0; a < g.order(); ++a)
                for (Elem b = 0; b < g.order(); ++b)
                    CHECK(shift(a, shift(b, c)) == shift(g.mul(a, b), c));
        }
    }
}

TEST_CASE("restriction and neighborhoods") {
    const FiniteGroup z3 = build_cyclic(3);
    const Config x(z3, q2, {1, 0, 1});

    const std::vector<Elem> full{0, 1, 2};
    CHECK(restrict_to(x, full).symbols == x.symbols());
    CHECK(restrict_to(x, std::vector<Elem>{}).symbols.empty());
    CHECK(restrict_to(x, std::vector<Elem>{0, 2}).symbols == std::vector<int>{1, 1});

    CHECK_THROWS_AS(restrict_to(x, std::vector<Elem>{2, 0}), StructuralError);
    CHECK_THROWS_AS(restrict_to(x, std::vector<Elem>{0, 5}), StructuralError);

    const FiniteGroup z2 = build_cyclic(2);
    const Config a(z2, q2, {0, 1}), b(z2, q2, {0, 0});
    CHECK(in_neighborhood(a, a, std::vector<Elem>{0, 1}));
    CHECK(in_neighborhood(b, a, std::vector<Elem>{}));
    CHECK(in_neighborhood(b, a, std::vector<Elem>{0}));
    CHECK_FALSE(in_neighborhood(b, a, std::vector<Elem>{0, 1}));
    const Config c3(build_cyclic(3), q2, {0, 0, 0});
    CHECK_THROWS_AS(in_neighborhood(c3, a, std::vector<Elem>{0}), StructuralError);
}

TEST_CASE("configuration enumeration") {
    const FiniteGroup z2 = build_cyclic(2);
    const FiniteGroup z3 = build_cyclic(3);

    CHECK(enumerate_configs(z2, q2).size() == 4);
    CHECK(enumerate_configs(z3, q2).size() == 8);

    auto range = enumerate_configs(z3, q2);
    std::vector<Config> all(range.begin(), range.end());
    CHECK(all.front().symbols() == std::vector<int>{0, 0, 0});
    for (std::size_t r = 0; r < all.size(); ++r) {
        CHECK(config_rank(all[r]) == r);
        CHECK(config_from_rank(z3, q2, r) == all[r]);
        if (r > 0)
            CHECK(all[r - 1].symbols() < all[r].symbols());
    }

    CHECK_THROWS_AS(enumerate_configs(build_cyclic(21), q2), BudgetError);
    CHECK_THROWS_AS(config_count(build_cyclic(30), q2), BudgetError);
}

TEST_CASE("indicator configurations") {
    const FiniteGroup z2 = build_cyclic(2);
    CHECK(indicator_config(z2, q2, 0).symbols() == std::vector<int>{1, 0});

    const FiniteGroup z3 = build_cyclic(3);
    for (Elem g = 0; g < 3; ++g) {
        const Config chi_g = indicator_config(z3, q2, g);
        int total = 0;
        for (int s : chi_g.symbols())
            total += s;
        CHECK(total == 1);
        for (Elem a = 0; a < 3; ++a)
            CHECK(shift(a, indicator_config(z3, q2, g)) ==
                  indicator_config(z3, q2, z3.mul(a, g)));
    }

    // Faithfulness: indicators separate distinct shifts.
    const FiniteGroup s3 = build_symmetric(3);
    for (Elem g = 0; g < s3.order(); ++g)
        for (Elem h = g + 1; h < s3.order(); ++h) {
            const Config chi = indicator_config(s3, q2, 0);
            CHECK_FALSE(shift(g, chi) == shift(h, chi));
        }
}

TEST_CASE("periodic configurations") {
    const FiniteGroup z6 = build_cyclic(6);

    // Fix({e}) is everything, Fix(G) the constants.
    CHECK(fix_subgroup(z6, q2, std::vector<Elem>{0}).size() == 64);
    const auto constants = fix_subgroup(z6, q2, std::vector<Elem>{0, 1, 2, 3, 4, 5});
    REQUIRE(constants.size() == 2);
    CHECK(constants[0].symbols() == std::vector<int>(6, 0));
    CHECK(constants[1].symbols() == std::vector<int>(6, 1));

    // K = {0, 3}: configurations constant on the three cosets.
    const std::vector<Elem> k{0, 3};
    const auto fixed = fix_subgroup(z6, q2, k);
    CHECK(fixed.size() == 8);
    std::set<std::vector<int>> expected;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                expected.insert({a, b, c, a, b, c});
    for (const Config& x : fixed)
        CHECK(expected.count(x.symbols()));

    CHECK_THROWS_AS(fix_subgroup(z6, q2, std::vector<Elem>{0, 1}), StructuralError);

    // |Fix(K)| = q^{#cosets} across every subgroup of Z6 and S3.
    for (const FiniteGroup& g : {z6, build_symmetric(3)}) {
        for (const auto& sub : all_subgroups(g)) {
            const std::size_t expect = std::size_t{1} << coset_count(g, sub);
            CHECK(fix_subgroup(g, q2, sub).size() == expect);
        }
    }
}
