#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gca/automaton.hpp"

using namespace gca;

namespace {

const Alphabet q2{2};

std::vector<Elem> full_support(const FiniteGroup& g) {
    std::vector<Elem> s(g.order());
    for (Elem i = 0; i < g.order(); ++i)
        s[i] = i;
    return s;
}

// Local rule over S = G reading a single coordinate of the pattern.
std::vector<int> projection_rule(int n, int pos, int q) {
    std::size_t len = 1;
    for (int i = 0; i < n; ++i)
        len *= q;
    std::vector<int> rule(len);
    for (std::size_t r = 0; r < len; ++r) {
        std::size_t tmp = r;
        std::vector<int> digits(n);
        for (int i = n; i-- > 0;) {
            digits[i] = static_cast<int>(tmp % q);
            tmp /= q;
        }
        rule[r] = digits[pos];
    }
    return rule;
}

std::vector<int> majority_rule_z3() {
    std::vector<int> rule(8);
    for (int r = 0; r < 8; ++r) {
        const int ones = ((r >> 2) & 1) + ((r >> 1) & 1) + (r & 1);
        rule[r] = ones >= 2;
    }
    return rule;
}

FunctionTable table_from_rows(const FiniteGroup& g, const FiniteGroup& h,
                              std::vector<std::vector<int>> rows) {
    std::vector<int> flat;
    for (auto& row : rows)
        flat.insert(flat.end(), row.begin(), row.end());
    return FunctionTable(g, h, q2, std::move(flat));
}

const GroupHom& reduction63() {
    static const FiniteGroup z6 = build_cyclic(6);
    static const FiniteGroup z3 = build_cyclic(3);
    static const GroupHom red(z6, z3, {0, 1, 2, 0, 1, 2});
    return red;
}

} // namespace

TEST_CASE("gca construction validation") {
    const FiniteGroup z3 = build_cyclic(3);
    const GroupHom id = identity_hom(z3);
    CHECK_THROWS_AS(Gca(id, {1, 0}, {0, 0, 0, 0}, q2), StructuralError); // unsorted
    CHECK_THROWS_AS(Gca(id, {0, 1}, {0, 0, 0}, q2), StructuralError);   // wrong length
    CHECK_THROWS_AS(Gca(id, {0, 5}, {0, 0, 0, 0}, q2), StructuralError);
    CHECK_NOTHROW(Gca(id, {}, {1}, q2)); // constant rule, empty memory
}

TEST_CASE("apply") {
    const FiniteGroup z3 = build_cyclic(3);
    const GroupHom id = identity_hom(z3);

    // Constant rule: every input and every hom gives the same constant map.
    for (const GroupHom& phi : enumerate_end(z3)) {
        const Gca constant(phi, {}, {1}, q2);
        for (const Config& x : enumerate_configs(z3, q2))
            CHECK(apply(constant, x).symbols() == std::vector<int>{1, 1, 1});
    }

    // S = {e}, identity rule, phi = id: the identity map.
    const Gca ident = identity_gca(z3, q2);
    for (const Config& x : enumerate_configs(z3, q2))
        CHECK(apply(ident, x) == x);

    // Majority over S = G on (1,1,0): every cell sees two ones.
    const Gca maj(id, full_support(z3), majority_rule_z3(), q2);
    CHECK(apply(maj, Config(z3, q2, {1, 1, 0})).symbols() == std::vector<int>{1, 1, 1});

    CHECK_THROWS_AS(apply(ident, Config(build_cyclic(2), q2, {0, 1})), StructuralError);
}

TEST_CASE("phi_star") {
    const FiniteGroup z3 = build_cyclic(3);
    const FiniteGroup z6 = build_cyclic(6);

    // Reduction Z6 -> Z3 tiles a 3-tuple into a period-3 configuration.
    const Gca star = phi_star(reduction63(), q2);
    CHECK(apply(star, Config(z3, q2, {1, 0, 0})).symbols() ==
          std::vector<int>{1, 0, 0, 1, 0, 0});

    // Sum hom Z3 x Z3 -> Z3: output at (a,b) reads x(a+b).
    const FiniteGroup z33 = build_direct_product(z3, z3);
    std::vector<Elem> sum_map(9);
    for (Elem a = 0; a < 3; ++a)
        for (Elem b = 0; b < 3; ++b)
            sum_map[product_index(a, b, 3)] = (a + b) % 3;
    const GroupHom sum(z33, z3, std::move(sum_map));
    const Gca sum_star = phi_star(sum, q2);
    for (const Config& x : enumerate_configs(z3, q2)) {
        const Config y = apply(sum_star, x);
        for (Elem a = 0; a < 3; ++a)
            for (Elem b = 0; b < 3; ++b)
                CHECK(y.at(product_index(a, b, 3)) == x.at((a + b) % 3));
    }

    // phi_star(id) is the identity on A^G.
    CHECK(to_table(phi_star(identity_hom(z6), q2)) == identity_table(z6, q2));
}

TEST_CASE("to_table") {
    const FiniteGroup z3 = build_cyclic(3);
    const GroupHom id = identity_hom(z3);

    const FunctionTable ident = to_table(identity_gca(z3, q2));
    CHECK(ident == identity_table(z3, q2));
    for (std::size_t r = 0; r < ident.rows(); ++r)
        CHECK(ident.row_rank(r) == r);

    // A rule that ignores its padded coordinates produces the same table.
    const Gca narrow(id, {1}, {0, 1}, q2);
    const Gca padded(id, full_support(z3), projection_rule(3, 1, 2), q2);
    CHECK(to_table(narrow) == to_table(padded));

    const Gca constant(id, {}, {1}, q2);
    const FunctionTable ct = to_table(constant);
    for (std::size_t r = 0; r < ct.rows(); ++r)
        CHECK(ct.row_rank(r) == 7); // (1,1,1)
}

TEST_CASE("equivariance") {
    const FiniteGroup z2 = build_cyclic(2);
    const GroupHom id = identity_hom(z2);

    // Swapping exactly the two constants commutes with both shifts.
    const auto swap_constants =
        table_from_rows(z2, z2, {{1, 1}, {0, 1}, {1, 0}, {0, 0}});
    CHECK(is_phi_equivariant(swap_constants, id));

    // Sending (0,1) to (0,0) breaks it at h = 1, x = (0,1).
    const auto collapse = table_from_rows(z2, z2, {{0, 0}, {0, 0}, {1, 0}, {1, 1}});
    const auto witness = equivariance_counterexample(collapse, id);
    REQUIRE(witness.has_value());
    CHECK(witness->h == 1);
    CHECK(witness->config_rank == 1);

    // Every constructed automaton is phi-equivariant: exhaustive over all
    // local rules with S = G for a few homs.
    const FiniteGroup z3 = build_cyclic(3);
    std::vector<GroupHom> homs = enumerate_end(z3);
    const auto& red = reduction63();
    homs.push_back(red);
    for (const GroupHom& phi : homs) {
        const FiniteGroup& g = phi.codomain();
        const std::size_t rules = std::size_t{1} << (std::size_t{1} << g.order());
        for (std::size_t r = 0; r < rules; ++r) {
            std::vector<int> rule(std::size_t{1} << g.order());
            for (std::size_t i = 0; i < rule.size(); ++i)
                rule[i] = static_cast<int>((r >> (rule.size() - 1 - i)) & 1);
            const Gca tau(phi, full_support(g), std::move(rule), q2);
            CHECK(is_phi_equivariant(to_table(tau), phi));
        }
    }
}

TEST_CASE("recognition") {
    const FiniteGroup z2 = build_cyclic(2);
    const FiniteGroup z3 = build_cyclic(3);
    const GroupHom id2 = identity_hom(z2);

    // phi_star tables recognize and minimize to memory {e}.
    for (const GroupHom& phi : enumerate_aut(z3)) {
        const FunctionTable f = to_table(phi_star(phi, q2));
        const Recognition rec = recognize(f, phi);
        REQUIRE(rec.ok());
        CHECK(to_table(*rec.automaton) == f);
        const Gca min = minimize_memory(*rec.automaton);
        CHECK(min.memory().size() == 1);
        CHECK(min.memory()[0] == FiniteGroup::identity);
    }

    const Recognition ident = recognize(identity_table(z2, q2), id2);
    REQUIRE(ident.ok());
    CHECK(to_table(*ident.automaton) == identity_table(z2, q2));

    const auto collapse = table_from_rows(z2, z2, {{0, 0}, {0, 0}, {1, 0}, {1, 1}});
    const Recognition refused = recognize(collapse, id2);
    CHECK_FALSE(refused.ok());
    REQUIRE(refused.refusal.has_value());
    CHECK(refused.refusal->h == 1);
    CHECK(refused.refusal->config_rank == 1);
}

TEST_CASE("memory minimization") {
    const FiniteGroup z3 = build_cyclic(3);
    const GroupHom id = identity_hom(z3);

    // Padded projection keeps only its read coordinate.
    const Gca padded(id, full_support(z3), projection_rule(3, 1, 2), q2);
    const Gca min = minimize_memory(padded);
    CHECK(std::vector<Elem>(min.memory().begin(), min.memory().end()) ==
          std::vector<Elem>{1});
    CHECK(to_table(min) == to_table(padded));

    // Constant rule minimizes to the empty memory set.
    const Gca constant(id, full_support(z3), std::vector<int>(8, 1), q2);
    CHECK(minimize_memory(constant).memory().empty());

    // Idempotence.
    const Gca twice = minimize_memory(min);
    CHECK(std::vector<Elem>(twice.memory().begin(), twice.memory().end()) ==
          std::vector<Elem>(min.memory().begin(), min.memory().end()));
    CHECK(to_table(twice) == to_table(min));
}

TEST_CASE("composition") {
    const FiniteGroup z3 = build_cyclic(3);
    const GroupHom id = identity_hom(z3);

    // Composing with the identity is a no-op on tables.
    const Gca maj(id, full_support(z3), majority_rule_z3(), q2);
    CHECK(to_table(compose(identity_gca(z3, q2), maj)) == to_table(maj));

    // (psi o phi)* = phi* o psi* across reductions of different groups.
    const FiniteGroup z6 = build_cyclic(6);
    const FiniteGroup z12 = build_cyclic(12);
    const GroupHom red126(z12, z6, {0, 1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5});
    const Gca lhs = compose(phi_star(red126, q2), phi_star(reduction63(), q2));
    CHECK(to_table(lhs) == to_table(phi_star(compose_hom(reduction63(), red126), q2)));
    CHECK(lhs.hom() == compose_hom(reduction63(), red126));

    // Memory set {0,1}.{0,1} = {0,1,2}, exhaustive over all rule pairs.
    for (std::size_t rs = 0; rs < 16; ++rs) {
        std::vector<int> rule_s(4), rule_t(4);
        for (int i = 0; i < 4; ++i)
            rule_s[i] = static_cast<int>((rs >> (3 - i)) & 1);
        for (std::size_t rt = 0; rt < 16; ++rt) {
            for (int i = 0; i < 4; ++i)
                rule_t[i] = static_cast<int>((rt >> (3 - i)) & 1);
            const Gca sigma(id, {0, 1}, rule_s, q2);
            const Gca tau(id, {0, 1}, rule_t, q2);
            const Gca prod = compose(sigma, tau);
            CHECK(std::vector<Elem>(prod.memory().begin(), prod.memory().end()) ==
                  std::vector<Elem>{0, 1, 2});
            CHECK(to_table(prod) == compose_tables(to_table(sigma), to_table(tau)));
        }
    }

    CHECK_THROWS_AS(compose(phi_star(reduction63(), q2), phi_star(reduction63(), q2)),
                    StructuralError);
}

TEST_CASE("invertibility") {
    const FiniteGroup z3 = build_cyclic(3);

    // invert(identity) = identity.
    const Inversion ident = invert(identity_gca(z3, q2));
    REQUIRE(ident.ok());
    CHECK(to_table(*ident.inverse) == identity_table(z3, q2));

    // Inversion automorphism: phi* is bijective and self-inverse.
    const GroupHom inv3(z3, z3, {0, 2, 1});
    const Gca star = phi_star(inv3, q2);
    CHECK(is_bijective(star));
    const Inversion res = invert(star);
    REQUIRE(res.ok());
    CHECK(to_table(*res.inverse) == to_table(star));
    CHECK(res.inverse->hom() == inv3);

    // The reduction's phi* is injective but not surjective: 8 < 64.
    const Gca red_star = phi_star(reduction63(), q2);
    CHECK_FALSE(is_bijective(red_star));
    std::set<std::size_t> image;
    const FunctionTable f = to_table(red_star);
    for (std::size_t r = 0; r < f.rows(); ++r)
        image.insert(f.row_rank(r));
    CHECK(image.size() == 8);
    const Inversion refused = invert(red_star);
    CHECK_FALSE(refused.ok());
    REQUIRE(refused.refusal.has_value());
    REQUIRE(refused.refusal->missing.has_value());
    // The witness really is outside the image.
    CHECK_FALSE(image.count(*refused.refusal->missing));

    // A constant automaton refuses with a collision.
    const FiniteGroup z2 = build_cyclic(2);
    const Inversion collided = invert(Gca(identity_hom(z2), {}, {0}, q2));
    REQUIRE(collided.refusal.has_value());
    REQUIRE(collided.refusal->collision.has_value());
    const auto [r1, r2] = *collided.refusal->collision;
    CHECK(r1 != r2);
}

TEST_CASE("kernel periodicity and the fix proposition") {
    const FiniteGroup z3 = build_cyclic(3);

    // Injective phi: kernel trivial, Fix(N) is everything.
    CHECK(image_subset_fix(identity_gca(z3, q2)));
    const FixEqualityReport full = phi_star_fix_report(identity_hom(z3), q2);
    CHECK(full.equal);
    CHECK(full.fix_count == 8);

    // The reduction: both sides enumerate to exactly 8, witnesses included.
    const FixEqualityReport red = phi_star_fix_report(reduction63(), q2);
    CHECK(red.equal);
    CHECK(red.fix_count == 8);
    CHECK(red.image_count == 8);
    CHECK(red.witnesses.size() == 8);
    CHECK(phi_star_image_equals_fix(reduction63(), q2));

    // Trivial hom Z2 -> Z3: image of phi* is the two constants = Fix(Z2).
    const GroupHom triv(build_cyclic(2), z3, {0, 0});
    const FixEqualityReport tr = phi_star_fix_report(triv, q2);
    CHECK(tr.equal);
    CHECK(tr.fix_count == 2);

    // Im(tau) inside Fix(ker phi) for every rule over S = G.
    for (std::size_t r = 0; r < 256; ++r) {
        std::vector<int> rule(8);
        for (int i = 0; i < 8; ++i)
            rule[i] = static_cast<int>((r >> (7 - i)) & 1);
        const Gca tau(reduction63(), {0, 1, 2}, std::move(rule), q2);
        CHECK(image_subset_fix(tau));
    }
}
