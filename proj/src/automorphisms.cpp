#include "gca/automorphisms.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gca {

namespace {

std::string hom_tag(const GroupHom& phi) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < phi.map().size(); ++i)
        os << (i ? "," : "") << phi.map()[i];
    os << "]";
    return os.str();
}

std::vector<int> inverse_permutation(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
        inv[perm[i]] = static_cast<int>(i);
    return inv;
}

} // namespace

bool is_monoid_automorphism(const MonoidCatalog& cat, const MonoidAutomorphism& alpha) {
    const std::size_t n = cat.size();
    if (alpha.perm.size() != n)
        return false;
    std::vector<bool> hit(n, false);
    for (int v : alpha.perm) {
        if (v < 0 || v >= static_cast<int>(n) || hit[v])
            return false;
        hit[v] = true;
    }
    if (alpha.perm[cat.identity_index()] != cat.identity_index())
        return false;

    if (cat.has_composition_table()) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (alpha.perm[cat.compose(static_cast<int>(i), static_cast<int>(j))] !=
                    cat.compose(alpha.perm[i], alpha.perm[j]))
                    return false;
        return true;
    }
    // No composition table: probe a deterministic sample of pairs.
    const std::size_t step = std::max<std::size_t>(1, n / 64);
    for (std::size_t i = 0; i < n; i += step)
        for (std::size_t j = 0; j < n; j += step)
            if (alpha.perm[cat.compose(static_cast<int>(i), static_cast<int>(j))] !=
                cat.compose(alpha.perm[i], alpha.perm[j]))
                return false;
    return true;
}

FunctionTable phi_ca_table(const GroupHom& phi, const FunctionTable& t) {
    if (!(t.domain() == t.codomain()))
        throw StructuralError("phi_ca: table must be an endo-map of A^G");
    if (!(phi.domain() == t.domain()) || !(phi.codomain() == t.domain()))
        throw StructuralError("phi_ca: automorphism group differs from table group");
    if (!phi.is_bijective())
        throw StructuralError("phi_ca: hom must be an automorphism");

    const Alphabet a(t.alphabet_size());
    const FunctionTable star = to_table(phi_star(phi, a));
    const FunctionTable star_inv = to_table(phi_star(phi.inverse(), a));
    FunctionTable out = compose_tables(star_inv, compose_tables(t, star));
    if (!is_phi_equivariant(out, identity_hom(t.domain())))
        throw TheoremViolation("phi_ca image is not id-equivariant");
    return out;
}

int phi_ca(const MonoidCatalog& ca, const GroupHom& phi, int index) {
    return ca.require_index(phi_ca_table(phi, ca.elements()[index].table));
}

MonoidAutomorphism induced_automorphism(const MonoidCatalog& ca, const GroupHom& phi) {
    const Alphabet a(ca.alphabet_size());
    const FunctionTable star = to_table(phi_star(phi, a));
    const FunctionTable star_inv = to_table(phi_star(phi.inverse(), a));

    MonoidAutomorphism alpha;
    alpha.provenance = "phi_ca " + hom_tag(phi);
    alpha.perm.reserve(ca.size());
    for (const auto& el : ca.elements()) {
        FunctionTable image = compose_tables(star_inv, compose_tables(el.table, star));
        alpha.perm.push_back(ca.require_index(image));
    }
    if (!is_monoid_automorphism(ca, alpha))
        throw TheoremViolation("phi_ca does not act as a monoid automorphism");
    return alpha;
}

PhiHomReport build_phi(const MonoidCatalog& ca, const std::vector<GroupHom>& aut) {
    PhiHomReport report;
    report.aut_count = aut.size();
    report.images.reserve(aut.size());
    for (const GroupHom& phi : aut)
        report.images.push_back(induced_automorphism(ca, phi));

    report.all_automorphisms = true; // induced_automorphism validated each image

    report.homomorphism = true;
    for (std::size_t i = 0; i < aut.size() && report.homomorphism; ++i) {
        for (std::size_t j = 0; j < aut.size() && report.homomorphism; ++j) {
            const GroupHom composed = compose_hom(aut[i], aut[j]);
            const MonoidAutomorphism lhs = induced_automorphism(ca, composed);
            for (std::size_t k = 0; k < ca.size(); ++k) {
                if (lhs.perm[k] != report.images[i].perm[report.images[j].perm[k]]) {
                    report.homomorphism = false;
                    break;
                }
            }
        }
    }

    std::set<std::vector<int>> distinct;
    for (const auto& img : report.images)
        distinct.insert(img.perm);
    report.distinct_images = distinct.size();
    return report;
}

int central_shift_ca(const MonoidCatalog& ca, Elem z) {
    const FiniteGroup& g = ca.group();
    const std::vector<Elem> zg = center(g);
    if (!std::binary_search(zg.begin(), zg.end(), z))
        throw StructuralError("central_shift_ca: element is not central");

    const Alphabet a(ca.alphabet_size());
    const std::size_t rows = config_count(g, a);
    std::vector<int> flat;
    flat.reserve(rows * static_cast<std::size_t>(g.order()));
    for (std::size_t r = 0; r < rows; ++r) {
        const Config y = shift(z, config_from_rank(g, a, r));
        flat.insert(flat.end(), y.symbols().begin(), y.symbols().end());
    }
    const FunctionTable tz(g, g, a, std::move(flat));
    if (!is_phi_equivariant(tz, identity_hom(g)))
        throw TheoremViolation("central shift is not id-equivariant");
    const int idx = ca.require_index(tz);
    for (int i = 0; i < static_cast<int>(ca.size()); ++i)
        if (ca.compose(idx, i) != ca.compose(i, idx))
            throw TheoremViolation("central shift fails to commute with the catalog");
    return idx;
}

InnerSearch is_inner(const MonoidCatalog& ca, const MonoidAutomorphism& alpha) {
    InnerSearch result;
    for (int sigma : ca.units()) {
        ++result.units_searched;
        const int sigma_inv = ca.inverse_unit(sigma);
        bool match = true;
        for (std::size_t i = 0; i < ca.size() && match; ++i) {
            const int conj = ca.compose(ca.compose(sigma_inv, static_cast<int>(i)), sigma);
            match = conj == alpha.perm[i];
        }
        if (match) {
            result.witness = sigma;
            return result;
        }
    }
    return result;
}

InnerTheoremReport theorem_inner_check(const FiniteGroup& g, Alphabet a,
                                       MonoidBudgets budgets) {
    const MonoidCatalog ca = enumerate_ca(g, a, budgets);
    const std::vector<GroupHom> aut = enumerate_aut(g);
    const std::vector<Elem> zg = center(g);

    InnerTheoremReport report;
    for (const GroupHom& phi : aut) {
        bool fixes = true;
        for (Elem z : zg)
            fixes = fixes && phi(z) == z;
        const MonoidAutomorphism alpha = induced_automorphism(ca, phi);
        const InnerSearch search = is_inner(ca, alpha);
        if (!fixes)
            ++report.center_movers;
        if (search.inner() && !fixes)
            ++report.violations;
        report.instances.push_back(InnerInstance{phi, fixes, search.inner(), search.witness});
    }
    return report;
}

OuterReport outer_embedding_check(const FiniteGroup& g, Alphabet a, MonoidBudgets budgets) {
    if (!g.is_abelian())
        throw StructuralError("outer_embedding_check requires an abelian group");
    const MonoidCatalog ca = enumerate_ca(g, a, budgets);
    const std::vector<GroupHom> aut = enumerate_aut(g);

    std::vector<MonoidAutomorphism> images;
    images.reserve(aut.size());
    for (const GroupHom& phi : aut)
        images.push_back(induced_automorphism(ca, phi));

    OuterReport report;
    report.aut_count = aut.size();
    for (std::size_t i = 0; i < aut.size(); ++i) {
        for (std::size_t j = i + 1; j < aut.size(); ++j) {
            ++report.pairs_checked;
            // psi_CA^-1 o phi_CA as a permutation.
            const std::vector<int> inv_j = inverse_permutation(images[j].perm);
            MonoidAutomorphism quotient;
            quotient.provenance = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            quotient.perm.resize(ca.size());
            for (std::size_t k = 0; k < ca.size(); ++k)
                quotient.perm[k] = inv_j[images[i].perm[k]];
            if (is_inner(ca, quotient).inner())
                report.collisions.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    report.distinct_classes =
        report.collisions.empty() ? aut.size() : aut.size() - report.collisions.size();
    return report;
}

} // namespace gca
