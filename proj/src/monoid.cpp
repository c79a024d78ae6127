#include "gca/monoid.hpp"

#include <algorithm>
#include <set>

namespace gca {

namespace {

std::size_t fnv1a(std::span<const int> data) {
    std::size_t h = 1469598103934665603ull;
    for (int v : data) {
        for (int b = 0; b < 4; ++b) {
            h ^= static_cast<std::size_t>((v >> (8 * b)) & 0xff);
            h *= 1099511628211ull;
        }
    }
    return h;
}

std::size_t rule_space_size(std::size_t rows, int q, std::size_t budget) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < rows; ++i) {
        if (count > budget / static_cast<std::size_t>(q))
            throw BudgetError("local-rule space exceeds the monoid budget");
        count *= static_cast<std::size_t>(q);
    }
    return count;
}

std::vector<int> rule_from_rank(std::size_t rank, std::size_t len, int q) {
    std::vector<int> rule(len);
    for (std::size_t i = len; i-- > 0;) {
        rule[i] = static_cast<int>(rank % static_cast<std::size_t>(q));
        rank /= static_cast<std::size_t>(q);
    }
    return rule;
}

std::vector<Elem> full_support(const FiniteGroup& g) {
    std::vector<Elem> s(g.order());
    for (Elem i = 0; i < g.order(); ++i)
        s[i] = i;
    return s;
}

/// Lexicographically least hom in `end` under which the table is
/// equivariant. Every catalog element is equivariant under its
/// construction hom, so the scan always terminates with a witness.
GroupHom least_witness(const FunctionTable& table, const std::vector<GroupHom>& end) {
    for (const GroupHom& phi : end)
        if (is_phi_equivariant(table, phi))
            return phi;
    throw TheoremViolation("catalog element admits no witnessing endomorphism");
}

CatalogElement annotate(FunctionTable table, const std::vector<GroupHom>& end) {
    GroupHom witness = least_witness(table, end);
    Recognition rec = recognize(table, witness);
    if (!rec.ok())
        throw TheoremViolation("witnessed table was refused by recognition");
    Gca minimized = minimize_memory(*rec.automaton);
    const bool invertible = is_bijective_table(table);
    return CatalogElement{std::move(table), std::move(witness), std::move(minimized), invertible};
}

} // namespace

MonoidCatalog::MonoidCatalog(FiniteGroup group, Alphabet alphabet,
                             std::vector<CatalogElement> elements,
                             std::size_t composition_budget)
    : group_(std::move(group)), q_(alphabet.size), elements_(std::move(elements)),
      identity_idx_(-1) {
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        const auto& flat = elements_[i].table.flat();
        auto& bucket = index_[fnv1a(flat)];
        for (int j : bucket)
            if (elements_[j].table.flat() == flat)
                throw StructuralError("catalog elements must be pairwise distinct tables");
        bucket.push_back(static_cast<int>(i));
    }

    const FunctionTable id = identity_table(group_, alphabet);
    auto id_idx = index_of(id);
    if (!id_idx)
        throw StructuralError("catalog does not contain the identity");
    identity_idx_ = *id_idx;

    const std::size_t n = elements_.size();
    if (n > 0 && n <= composition_budget / n) {
        comp_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                comp_[i * n + j] =
                    require_index(compose_tables(elements_[i].table, elements_[j].table));
    }

    // Units: bijective tables whose inverse table is again a member. By
    // the invertibility theorem these are exactly the two-sided units.
    unit_inverse_.assign(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        if (!elements_[i].invertible)
            continue;
        const FunctionTable& t = elements_[i].table;
        std::vector<int> flat(t.flat().size());
        const Alphabet a(q_);
        for (std::size_t r = 0; r < t.rows(); ++r) {
            const Config x = config_from_rank(t.domain(), a, r);
            std::copy(x.symbols().begin(), x.symbols().end(),
                      flat.begin() + static_cast<std::ptrdiff_t>(t.row_rank(r) *
                                                                 t.domain().order()));
        }
        FunctionTable inv(t.codomain(), t.domain(), a, std::move(flat));
        unit_inverse_[i] = require_index(inv);
        units_.push_back(static_cast<int>(i));
    }
}

std::size_t MonoidCatalog::fingerprint(const FunctionTable& t) const {
    return fnv1a(t.flat());
}

std::optional<int> MonoidCatalog::index_of(const FunctionTable& t) const {
    auto it = index_.find(fingerprint(t));
    if (it == index_.end())
        return std::nullopt;
    for (int i : it->second)
        if (elements_[i].table.flat() == t.flat())
            return i;
    return std::nullopt;
}

int MonoidCatalog::require_index(const FunctionTable& t) const {
    if (auto idx = index_of(t))
        return *idx;
    throw TheoremViolation("composite escapes the catalog: monoid not closed");
}

int MonoidCatalog::compose(int i, int j) const {
    if (!comp_.empty())
        return comp_[static_cast<std::size_t>(i) * elements_.size() + j];
    return require_index(compose_tables(elements_[i].table, elements_[j].table));
}

int MonoidCatalog::inverse_unit(int i) const {
    if (i < 0 || i >= static_cast<int>(elements_.size()) || unit_inverse_[i] < 0)
        throw StructuralError("inverse_unit: not a unit");
    return unit_inverse_[i];
}

MonoidCatalog enumerate_ca(const FiniteGroup& g, Alphabet a, MonoidBudgets budgets) {
    const std::size_t rows = config_count(g, a, budgets.configs);
    const std::size_t rules = rule_space_size(rows, a.size, budgets.rules);
    const std::vector<GroupHom> end = enumerate_end(g);
    const GroupHom id = identity_hom(g);
    const std::vector<Elem> support = full_support(g);

    std::vector<CatalogElement> elements;
    std::set<std::vector<int>> seen;
    for (std::size_t r = 0; r < rules; ++r) {
        Gca tau(id, support, rule_from_rank(r, rows, a.size), a);
        FunctionTable table = to_table(tau, budgets.configs);
        if (!seen.insert(table.flat()).second)
            continue;
        elements.push_back(annotate(std::move(table), end));
    }
    return MonoidCatalog(g, a, std::move(elements), budgets.composition);
}

MonoidCatalog enumerate_gca(const FiniteGroup& g, Alphabet a, MonoidBudgets budgets) {
    const std::size_t rows = config_count(g, a, budgets.configs);
    const std::size_t rules = rule_space_size(rows, a.size, budgets.rules);
    const std::vector<GroupHom> end = enumerate_end(g);
    const GroupHom id = identity_hom(g);
    const std::vector<Elem> support = full_support(g);

    // Union over End(G) of phi* o CA(G;A), per the product lemma.
    std::vector<CatalogElement> elements;
    std::set<std::vector<int>> seen;
    for (const GroupHom& phi : end) {
        const FunctionTable star = to_table(phi_star(phi, a), budgets.configs);
        for (std::size_t r = 0; r < rules; ++r) {
            Gca tau_hat(id, support, rule_from_rank(r, rows, a.size), a);
            FunctionTable table = compose_tables(star, to_table(tau_hat, budgets.configs));
            if (!seen.insert(table.flat()).second)
                continue;
            elements.push_back(annotate(std::move(table), end));
        }
    }
    return MonoidCatalog(g, a, std::move(elements), budgets.composition);
}

MonoidCatalog unit_subcatalog(const MonoidCatalog& cat, std::size_t composition_budget) {
    std::vector<CatalogElement> units;
    units.reserve(cat.units().size());
    for (int i : cat.units())
        units.push_back(cat.elements()[i]);
    return MonoidCatalog(cat.group(), Alphabet(cat.alphabet_size()), std::move(units),
                         composition_budget);
}

MonoidCatalog enumerate_ica(const FiniteGroup& g, Alphabet a, MonoidBudgets budgets) {
    return unit_subcatalog(enumerate_ca(g, a, budgets), budgets.composition);
}

MonoidCatalog enumerate_igca(const FiniteGroup& g, Alphabet a, MonoidBudgets budgets) {
    return unit_subcatalog(enumerate_gca(g, a, budgets), budgets.composition);
}

EmbedReport embed_end_op(const FiniteGroup& g, Alphabet a, std::size_t budget) {
    const std::vector<GroupHom> end = enumerate_end(g);
    std::vector<FunctionTable> tables;
    tables.reserve(end.size());
    for (const GroupHom& phi : end)
        tables.push_back(to_table(phi_star(phi, a), budget));

    EmbedReport report;
    report.end_count = end.size();

    report.injective = true;
    for (std::size_t i = 0; i < end.size(); ++i) {
        for (std::size_t j = i + 1; j < end.size(); ++j) {
            if (tables[i] == tables[j]) {
                report.injective = false;
                continue;
            }
            // The proof's separation: pick g with phi(g) != psi(g); then
            // chi_{phi(g)} distinguishes phi* from psi* at cell g.
            for (Elem e = 0; e < g.order(); ++e) {
                if (end[i](e) != end[j](e)) {
                    const Config chi = indicator_config(g, a, end[i](e));
                    const std::size_t rank = config_rank(chi);
                    if (tables[i].row(rank)[e] == tables[j].row(rank)[e])
                        throw TheoremViolation("indicator config failed to separate phi* tables");
                    report.separations.push_back(SeparationWitness{
                        static_cast<int>(i), static_cast<int>(j), e, rank});
                    break;
                }
            }
        }
    }

    // Phi(phi (.) psi) = Phi(phi) o Phi(psi), i.e. (psi o phi)* = phi* o psi*.
    report.anti_multiplicative = true;
    for (std::size_t i = 0; i < end.size(); ++i) {
        for (std::size_t j = 0; j < end.size(); ++j) {
            const GroupHom product = op_product(end[i], end[j]);
            const FunctionTable lhs = to_table(phi_star(product, a), budget);
            const FunctionTable rhs = compose_tables(tables[i], tables[j]);
            if (!(lhs == rhs)) {
                report.anti_multiplicative = false;
                report.violations.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return report;
}

Decomposition decompose(const CatalogElement& element, std::size_t budget) {
    const Alphabet a(element.table.alphabet_size());
    const FiniteGroup& g = element.table.domain();
    const Gca& m = element.automaton;

    Gca tau_hat(identity_hom(g), std::vector<Elem>(m.memory().begin(), m.memory().end()),
                std::vector<int>(m.rule().begin(), m.rule().end()), a);
    Gca recomposed = compose(phi_star(element.witness, a), tau_hat, budget);
    if (!(to_table(recomposed, budget) == element.table))
        throw TheoremViolation("decomposition does not recompose to the original table");

    if (element.invertible) {
        if (!element.witness.is_bijective())
            throw TheoremViolation("invertible element with non-automorphism witness");
        if (!is_bijective(tau_hat, budget))
            throw TheoremViolation("invertible element with non-bijective id-CA part");
    }
    return Decomposition{element.witness, std::move(tau_hat)};
}

SemidirectCertificate verify_semidirect(const FiniteGroup& g, Alphabet a,
                                        MonoidBudgets budgets) {
    const MonoidCatalog ca = enumerate_ca(g, a, budgets);
    const MonoidCatalog gca = enumerate_gca(g, a, budgets);
    const MonoidCatalog ica = unit_subcatalog(ca, budgets.composition);
    const MonoidCatalog igca = unit_subcatalog(gca, budgets.composition);
    const std::vector<GroupHom> aut = enumerate_aut(g);

    SemidirectCertificate cert;
    cert.ca_size = ca.size();
    cert.gca_size = gca.size();
    cert.ica_size = ica.size();
    cert.igca_size = igca.size();
    cert.aut_size = aut.size();

    // (i) Conjugation tau^-1 o sigma o tau stays in ICA.
    cert.normal = true;
    for (int si = 0; si < static_cast<int>(ica.size()) && cert.normal; ++si) {
        const FunctionTable& sigma = ica.elements()[si].table;
        for (int ti = 0; ti < static_cast<int>(igca.size()); ++ti) {
            const int inv_ti = igca.inverse_unit(ti);
            const FunctionTable conj = compose_tables(
                igca.elements()[inv_ti].table,
                compose_tables(sigma, igca.elements()[ti].table));
            if (!ica.index_of(conj)) {
                cert.normal = false;
                cert.normality_witness = std::make_pair(si, ti);
                break;
            }
        }
    }

    // (ii) IGCA = {phi* : phi in Aut} o ICA as sets.
    std::vector<FunctionTable> stars;
    stars.reserve(aut.size());
    for (const GroupHom& phi : aut)
        stars.push_back(to_table(phi_star(phi, a), budgets.configs));

    std::set<std::vector<int>> product_set;
    for (const FunctionTable& star : stars)
        for (const auto& el : ica.elements())
            product_set.insert(compose_tables(star, el.table).flat());
    std::set<std::vector<int>> igca_set;
    for (const auto& el : igca.elements())
        igca_set.insert(el.table.flat());
    cert.product = product_set == igca_set;

    // (iii) {phi*} meet ICA = {identity}.
    cert.trivial_intersection = true;
    const FunctionTable id = identity_table(g, a, budgets.configs);
    for (const FunctionTable& star : stars) {
        if (ica.index_of(star) && !(star == id)) {
            cert.trivial_intersection = false;
            break;
        }
    }

    // (iv) |IGCA| = |ICA| * |Aut(G)|.
    cert.counts = cert.igca_size == cert.ica_size * cert.aut_size;
    return cert;
}

LePhiReport le_phi_scan(const FiniteGroup& h, const FiniteGroup& g, Alphabet a,
                        MonoidBudgets budgets) {
    const std::size_t rows = config_count(g, a, budgets.configs);
    const std::size_t rules = rule_space_size(rows, a.size, budgets.rules);
    const std::vector<GroupHom> homs = enumerate_homs(h, g);
    const std::vector<Elem> support = full_support(g);

    LePhiReport report;
    report.hom_count = homs.size();
    for (std::size_t hi = 0; hi < homs.size(); ++hi) {
        const GroupHom& phi = homs[hi];
        const bool phi_injective = phi.is_injective();
        const bool phi_surjective = phi.is_surjective();
        for (std::size_t r = 0; r < rules; ++r) {
            Gca tau(phi, support, rule_from_rank(r, rows, a.size), a);
            const FunctionTable table = to_table(tau, budgets.configs);
            ++report.automata_checked;
            if (is_surjective_table(table) && !phi_injective)
                report.violations.push_back(LePhiViolation{static_cast<int>(hi), r, true});
            if (is_injective_table(table) && !phi_surjective)
                report.violations.push_back(LePhiViolation{static_cast<int>(hi), r, false});
        }
    }

    // Converse failure: the constant id-CA on A^G is neither injective
    // nor surjective although id_G is bijective.
    Gca constant(identity_hom(g), {}, std::vector<int>{0}, a);
    const FunctionTable ct = to_table(constant, budgets.configs);
    report.converse_witness = !is_injective_table(ct) && !is_surjective_table(ct);
    return report;
}

} // namespace gca
