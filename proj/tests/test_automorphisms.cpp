#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "gca/automorphisms.hpp"

using namespace gca;

namespace {

const Alphabet q2{2};

std::vector<Elem> full_support(const FiniteGroup& g) {
    std::vector<Elem> s(g.order());
    std::iota(s.begin(), s.end(), 0);
    return s;
}

std::vector<int> projection_rule_z3(int pos) {
    std::vector<int> rule(8);
    for (int r = 0; r < 8; ++r)
        rule[r] = (r >> (2 - pos)) & 1;
    return rule;
}

} // namespace

TEST_CASE("phi_ca with the identity is the identity") {
    const FiniteGroup z3 = build_cyclic(3);
    const MonoidCatalog ca = enumerate_ca(z3, q2);
    const MonoidAutomorphism alpha = induced_automorphism(ca, identity_hom(z3));
    for (std::size_t i = 0; i < ca.size(); ++i)
        CHECK(alpha.perm[i] == static_cast<int>(i));
    CHECK(is_monoid_automorphism(ca, alpha));
}

TEST_CASE("inversion swaps the neighbor-copy rules") {
    const FiniteGroup z3 = build_cyclic(3);
    const MonoidCatalog ca = enumerate_ca(z3, q2);
    const GroupHom inv3(z3, z3, {0, 2, 1});

    const auto copy1 = ca.index_of(
        to_table(Gca(identity_hom(z3), full_support(z3), projection_rule_z3(1), q2)));
    const auto copy2 = ca.index_of(
        to_table(Gca(identity_hom(z3), full_support(z3), projection_rule_z3(2), q2)));
    REQUIRE(copy1.has_value());
    REQUIRE(copy2.has_value());

    CHECK(phi_ca(ca, inv3, *copy1) == *copy2);
    CHECK(phi_ca(ca, inv3, *copy2) == *copy1);
    CHECK_THROWS_AS(phi_ca(ca, trivial_hom(z3, z3), *copy1), StructuralError);
}

TEST_CASE("Phi is a homomorphism into Aut(CA(G;A))") {
    const FiniteGroup z3 = build_cyclic(3);
    const MonoidCatalog ca = enumerate_ca(z3, q2);
    const std::vector<GroupHom> aut = enumerate_aut(z3);

    const PhiHomReport report = build_phi(ca, aut);
    CHECK(report.pass());
    CHECK(report.aut_count == 2);
    CHECK(report.distinct_images == 2);

    // (phi o psi)_CA = phi_CA o psi_CA, written out explicitly.
    for (const GroupHom& phi : aut) {
        for (const GroupHom& psi : aut) {
            const MonoidAutomorphism lhs = induced_automorphism(ca, compose_hom(phi, psi));
            const MonoidAutomorphism f = induced_automorphism(ca, phi);
            const MonoidAutomorphism g = induced_automorphism(ca, psi);
            for (std::size_t k = 0; k < ca.size(); ++k)
                CHECK(lhs.perm[k] == f.perm[g.perm[k]]);
        }
    }
}

TEST_CASE("central shifts") {
    const FiniteGroup z3 = build_cyclic(3);
    const MonoidCatalog ca = enumerate_ca(z3, q2);

    CHECK(central_shift_ca(ca, 0) == ca.identity_index());

    // z = 1: the rotation table; the construction asserts commutation
    // with all 256 members.
    const int rot = central_shift_ca(ca, 1);
    const auto expected = ca.index_of(
        to_table(Gca(identity_hom(z3), full_support(z3), projection_rule_z3(2), q2)));
    REQUIRE(expected.has_value());
    CHECK(rot == *expected);

    CHECK_THROWS_AS(central_shift_ca(ca, 7), StructuralError);

    // Nonabelian sanity: only e is central in S3.
    CHECK(center(build_symmetric(3)) == std::vector<Elem>{0});
}

TEST_CASE("inner automorphism search") {
    const FiniteGroup z3 = build_cyclic(3);
    const MonoidCatalog ca = enumerate_ca(z3, q2);

    // The identity automorphism is inner; the first witness must itself
    // conjugate to the identity and appear no later than the identity.
    MonoidAutomorphism ident;
    ident.perm.resize(ca.size());
    std::iota(ident.perm.begin(), ident.perm.end(), 0);
    ident.provenance = "identity";
    const InnerSearch id_search = is_inner(ca, ident);
    REQUIRE(id_search.inner());
    CHECK(*id_search.witness <= ca.identity_index());

    // Conjugation by an arbitrary unit is inner by construction.
    const int sigma = ca.units()[ca.units().size() / 2];
    const int sigma_inv = ca.inverse_unit(sigma);
    MonoidAutomorphism conj;
    conj.provenance = "conj";
    conj.perm.resize(ca.size());
    for (std::size_t i = 0; i < ca.size(); ++i)
        conj.perm[i] = ca.compose(ca.compose(sigma_inv, static_cast<int>(i)), sigma);
    const InnerSearch conj_search = is_inner(ca, conj);
    REQUIRE(conj_search.inner());
    // The witness reproduces the same automorphism even if it differs
    // from sigma.
    const int w = *conj_search.witness;
    const int w_inv = ca.inverse_unit(w);
    for (std::size_t i = 0; i < ca.size(); ++i)
        CHECK(ca.compose(ca.compose(w_inv, static_cast<int>(i)), w) == conj.perm[i]);

    // Inversion moves the center of Z3, so phi_CA is refused exhaustively.
    const GroupHom inv3(z3, z3, {0, 2, 1});
    const InnerSearch refusal = is_inner(ca, induced_automorphism(ca, inv3));
    CHECK_FALSE(refusal.inner());
    CHECK(refusal.units_searched == ca.units().size());
}

TEST_CASE("inner-automorphism theorem on Z2 and Z3") {
    // Z2: only the identity automorphism; vacuously consistent.
    const InnerTheoremReport z2 = theorem_inner_check(build_cyclic(2), q2);
    CHECK(z2.pass());
    CHECK(z2.instances.size() == 1);
    CHECK(z2.instances[0].inner);
    CHECK(z2.center_movers == 0);

    // Z3: inversion moves 1 in Z(G) and must be refused.
    const InnerTheoremReport z3 = theorem_inner_check(build_cyclic(3), q2);
    CHECK(z3.pass());
    CHECK(z3.instances.size() == 2);
    CHECK(z3.center_movers == 1);
    for (const auto& inst : z3.instances) {
        if (inst.fixes_center)
            CHECK(inst.inner);
        else
            CHECK_FALSE(inst.inner);
    }
}

TEST_CASE("inner-automorphism theorem on Z4") {
    // k -> 3k moves the central element 1: not inner, found by exhausting
    // all units of the 65536-element catalog.
    const InnerTheoremReport z4 = theorem_inner_check(build_cyclic(4), q2);
    CHECK(z4.pass());
    CHECK(z4.instances.size() == 2);
    CHECK(z4.center_movers == 1);
    std::size_t refusals = 0;
    for (const auto& inst : z4.instances)
        if (!inst.inner)
            ++refusals;
    CHECK(refusals == 1);
}

TEST_CASE("outer embedding for abelian groups") {
    const OuterReport z2 = outer_embedding_check(build_cyclic(2), q2);
    CHECK(z2.pass());
    CHECK(z2.distinct_classes == 1);

    const OuterReport z3 = outer_embedding_check(build_cyclic(3), q2);
    CHECK(z3.pass());
    CHECK(z3.aut_count == 2);
    CHECK(z3.distinct_classes == 2);
    CHECK(z3.pairs_checked == 1);

    CHECK_THROWS_AS(outer_embedding_check(build_symmetric(3), q2), StructuralError);
}

TEST_CASE("outer embedding for the Klein four-group") {
    // All 6 automorphisms yield distinct permutations of the 65536-element
    // catalog and distinct Out-classes.
    const FiniteGroup klein = build_direct_product(build_cyclic(2), build_cyclic(2));
    const MonoidCatalog ca = enumerate_ca(klein, q2);
    CHECK(ca.size() == 65536);
    const std::vector<GroupHom> aut = enumerate_aut(klein);
    REQUIRE(aut.size() == 6);

    std::set<std::vector<int>> perms;
    for (const GroupHom& phi : aut)
        perms.insert(induced_automorphism(ca, phi).perm);
    CHECK(perms.size() == 6);

    const OuterReport report = outer_embedding_check(klein, q2);
    CHECK(report.pass());
    CHECK(report.distinct_classes == 6);
}
