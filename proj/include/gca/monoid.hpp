// Desk-scale enumeration of the monoids CA(G;A) and GCA(G;A) and their
// unit groups, with element identity given by the extensional
// FunctionTable. Includes the End(G)^op embedding, the phi* o tau-hat
// decomposition, the semidirect-product certificate, and the
// injectivity/surjectivity scan for the hom of an automaton.

#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "gca/automaton.hpp"

namespace gca {

struct MonoidBudgets {
    std::size_t configs = kDefaultConfigBudget;        // q^|G|
    std::size_t rules = std::size_t{1} << 20;          // q^(q^|G|) local rules
    std::size_t composition = std::size_t{1} << 22;    // size^2 table entries
};

struct CatalogElement {
    FunctionTable table;
    /// Lexicographically least hom in End(G) under which the table is
    /// equivariant. Presentations are not unique; the table is the identity.
    GroupHom witness;
    /// Minimized automaton realizing the table over the witness hom.
    Gca automaton;
    bool invertible;
};

class MonoidCatalog {
public:
    /// Elements must be pairwise distinct tables over one (G, A) and
    /// closed under composition; the identity table must be present.
    /// The composition table is materialized only when size^2 fits the
    /// budget; compose() falls back to composing tables directly.
    MonoidCatalog(FiniteGroup group, Alphabet alphabet, std::vector<CatalogElement> elements,
                  std::size_t composition_budget = MonoidBudgets{}.composition);

    const FiniteGroup& group() const { return group_; }
    int alphabet_size() const { return q_; }
    const std::vector<CatalogElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    std::optional<int> index_of(const FunctionTable& t) const;
    /// index_of, with absence treated as a closure defect.
    int require_index(const FunctionTable& t) const;

    /// Index of elements[i] o elements[j] (j applied first).
    int compose(int i, int j) const;
    bool has_composition_table() const { return !comp_.empty(); }

    /// Ascending catalog indices of the elements with a two-sided inverse.
    const std::vector<int>& units() const { return units_; }
    int identity_index() const { return identity_idx_; }
    int inverse_unit(int i) const;

private:
    FiniteGroup group_;
    int q_;
    std::vector<CatalogElement> elements_;
    // Fingerprint buckets; lookups verify the flat table to rule out
    // hash collisions.
    std::unordered_map<std::size_t, std::vector<int>> index_;
    std::vector<int> comp_;
    std::vector<int> units_;
    std::vector<int> unit_inverse_;
    int identity_idx_;

    std::size_t fingerprint(const FunctionTable& t) const;
};

/// All id_G-cellular automata, enumerated through local rules with S = G
/// (never by filtering set functions) and deduplicated by table.
MonoidCatalog enumerate_ca(const FiniteGroup& g, Alphabet a, MonoidBudgets budgets = {});

/// All phi-cellular automata for phi in End(G): the union over End(G) of
/// phi* o CA(G;A), deduplicated by table.
MonoidCatalog enumerate_gca(const FiniteGroup& g, Alphabet a, MonoidBudgets budgets = {});

/// The unit group of a catalog as its own catalog.
MonoidCatalog unit_subcatalog(const MonoidCatalog& cat,
                              std::size_t composition_budget = MonoidBudgets{}.composition);

MonoidCatalog enumerate_ica(const FiniteGroup& g, Alphabet a, MonoidBudgets budgets = {});
MonoidCatalog enumerate_igca(const FiniteGroup& g, Alphabet a, MonoidBudgets budgets = {});

struct SeparationWitness {
    int first_end_index;
    int second_end_index;
    Elem disagreement;           // g with phi(g) != psi(g)
    std::size_t indicator_rank;  // rank of chi_{phi(g)}, the separating config
};

struct EmbedReport {
    std::size_t end_count = 0;
    bool injective = false;
    bool anti_multiplicative = false;
    /// One indicator-config witness per unordered pair of distinct homs.
    std::vector<SeparationWitness> separations;
    /// Pairs (i, j) where Phi(phi_i (.) phi_j) != Phi(phi_i) o Phi(phi_j).
    std::vector<std::pair<int, int>> violations;

    bool pass() const { return injective && anti_multiplicative && violations.empty(); }
};

/// Checks that Phi(phi) = phi* embeds End(G)^op into GCA(G;A):
/// anti-multiplicative on all pairs and injective, with the proof's
/// indicator-function separation realized explicitly.
EmbedReport embed_end_op(const FiniteGroup& g, Alphabet a,
                         std::size_t budget = kDefaultConfigBudget);

struct Decomposition {
    GroupHom phi;
    Gca tau_hat; // id-CA with the same memory set and local rule
};

/// tau = phi* o tau_hat with phi the element's witness hom. Asserts exact
/// recomposition; for invertible elements additionally asserts phi is an
/// automorphism and tau_hat is bijective.
Decomposition decompose(const CatalogElement& element,
                        std::size_t budget = kDefaultConfigBudget);

struct SemidirectCertificate {
    std::size_t ca_size = 0;
    std::size_t gca_size = 0;
    std::size_t ica_size = 0;
    std::size_t igca_size = 0;
    std::size_t aut_size = 0;
    bool normal = false;               // ICA normal in IGCA by conjugation
    bool product = false;              // IGCA = {phi*} o ICA as sets
    bool trivial_intersection = false; // {phi*} meet ICA = {identity}
    bool counts = false;               // |IGCA| = |ICA| * |Aut(G)|
    /// (index in ICA, index in IGCA) of a failed conjugation, if any.
    std::optional<std::pair<int, int>> normality_witness;

    bool pass() const { return normal && product && trivial_intersection && counts; }
};

SemidirectCertificate verify_semidirect(const FiniteGroup& g, Alphabet a,
                                        MonoidBudgets budgets = {});

struct LePhiViolation {
    int hom_index;
    std::size_t rule_rank;
    bool surjective_case; // true: tau surjective but phi not injective
};

struct LePhiReport {
    std::size_t hom_count = 0;
    std::size_t automata_checked = 0;
    std::vector<LePhiViolation> violations;
    /// The constant id-CA on A^G: neither injective nor surjective while
    /// its hom is bijective, witnessing that both converses fail.
    bool converse_witness = false;

    bool pass() const { return violations.empty() && converse_witness; }
};

/// Over every hom in Hom(H,G) and every local rule with S = G, checks
/// "tau surjective implies phi injective" and "tau injective implies phi
/// surjective".
LePhiReport le_phi_scan(const FiniteGroup& h, const FiniteGroup& g, Alphabet a,
                        MonoidBudgets budgets = {});

} // namespace gca
