// The phi-cellular automaton: a hom phi : H -> G, a memory set S inside G,
// and a local rule mu : A^S -> A evaluated as
//
//     tau(x)(h) = mu((phi(h^-1) . x) | S).
//
// FunctionTable is the extensional form of an arbitrary map A^G -> A^H and
// is the canonical identity used everywhere tables are compared.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gca/config.hpp"
#include "gca/group.hpp"

namespace gca {

class Gca {
public:
    /// memory must be sorted and distinct; rule must have q^|memory|
    /// entries. An empty memory set encodes a constant rule (one entry).
    Gca(GroupHom phi, std::vector<Elem> memory, std::vector<int> rule, Alphabet alphabet);

    const GroupHom& hom() const { return phi_; }
    const FiniteGroup& domain_group() const { return phi_.codomain(); }   // G
    const FiniteGroup& codomain_group() const { return phi_.domain(); }   // H
    std::span<const Elem> memory() const { return memory_; }
    std::span<const int> rule() const { return rule_; }
    int alphabet_size() const { return q_; }

    /// Local rule evaluated on the pattern read off x at mul(base, s).
    int local(const Config& x, Elem base) const;

private:
    GroupHom phi_;
    std::vector<Elem> memory_;
    std::vector<int> rule_;
    int q_;
};

Config apply(const Gca& tau, const Config& x);

/// phi* : A^G -> A^H, x -> x o phi. Memory {e_G}, identity local rule.
Gca phi_star(const GroupHom& phi, Alphabet a);
Gca identity_gca(const FiniteGroup& g, Alphabet a);

/// Extensional table of a function A^G -> A^H: for every domain
/// configuration in lexicographic rank order, the full image configuration.
class FunctionTable {
public:
    FunctionTable(FiniteGroup domain, FiniteGroup codomain, Alphabet alphabet,
                  std::vector<int> flat_outputs);

    const FiniteGroup& domain() const { return domain_; }
    const FiniteGroup& codomain() const { return codomain_; }
    int alphabet_size() const { return q_; }

    std::size_t rows() const { return rows_; }
    std::span<const int> row(std::size_t r) const {
        return {flat_.data() + r * codomain_.order(), static_cast<std::size_t>(codomain_.order())};
    }
    /// Canonical equality key.
    const std::vector<int>& flat() const { return flat_; }

    std::size_t row_rank(std::size_t r) const { return pattern_rank(row(r), q_); }

    friend bool operator==(const FunctionTable& a, const FunctionTable& b) {
        return a.q_ == b.q_ && a.flat_ == b.flat_ && a.domain_ == b.domain_ &&
               a.codomain_ == b.codomain_;
    }

private:
    FiniteGroup domain_;
    FiniteGroup codomain_;
    int q_;
    std::size_t rows_;
    std::vector<int> flat_;
};

FunctionTable to_table(const Gca& tau, std::size_t budget = kDefaultConfigBudget);
FunctionTable identity_table(const FiniteGroup& g, Alphabet a,
                             std::size_t budget = kDefaultConfigBudget);

/// after o before as tables. Requires before.codomain == after.domain.
FunctionTable compose_tables(const FunctionTable& after, const FunctionTable& before);

bool is_injective_table(const FunctionTable& f);
bool is_surjective_table(const FunctionTable& f);
bool is_bijective_table(const FunctionTable& f);

/// First (h, x) violating h . f(x) = f(phi(h) . x), scanning h in element
/// order and x in rank order.
struct EquivarianceWitness {
    Elem h;
    std::size_t config_rank;
};

std::optional<EquivarianceWitness> equivariance_counterexample(const FunctionTable& f,
                                                               const GroupHom& phi);
bool is_phi_equivariant(const FunctionTable& f, const GroupHom& phi);

/// Curtis-Hedlund recognition: an equivariant table is realized with
/// memory S = G and mu(z) = f(z)(e_H); a non-equivariant table is refused
/// with the counterexample. A recognized automaton always round-trips
/// through to_table exactly.
struct Recognition {
    std::optional<Gca> automaton;
    std::optional<EquivarianceWitness> refusal;

    bool ok() const { return automaton.has_value(); }
};

Recognition recognize(const FunctionTable& f, const GroupHom& phi);

/// Shrinks the memory set to the essential coordinates of pi_e o tau: the
/// coordinates where some single-symbol change moves the output at the
/// identity. The table is preserved exactly and the result is minimal
/// under single-element removal.
Gca minimize_memory(const Gca& tau, std::size_t budget = kDefaultConfigBudget);

/// sigma o tau. sigma is a psi-CA with memory S, tau a phi-CA with memory
/// T; the result is a (phi o psi)-CA with memory set phi(S)T, its rule
/// built by zero-extending patterns. Asserts table equality against the
/// pointwise composition.
Gca compose(const Gca& sigma, const Gca& tau, std::size_t budget = kDefaultConfigBudget);

bool is_bijective(const Gca& tau, std::size_t budget = kDefaultConfigBudget);

struct InversionFailure {
    /// Two distinct domain ranks with equal images, when not injective.
    std::optional<std::pair<std::size_t, std::size_t>> collision;
    /// Rank of a codomain configuration outside the image, when not surjective.
    std::optional<std::size_t> missing;
};

struct Inversion {
    std::optional<Gca> inverse;
    std::optional<InversionFailure> refusal;

    bool ok() const { return inverse.has_value(); }
};

/// Inverts a bijective automaton: the inverse is a phi^-1-CA and both
/// round-trip compositions are asserted to be identity tables. A
/// non-bijective automaton is refused with a witness.
Inversion invert(const Gca& tau, std::size_t budget = kDefaultConfigBudget);

/// Im(tau) contained in Fix(ker phi).
bool image_subset_fix(const Gca& tau, std::size_t budget = kDefaultConfigBudget);

struct FixEqualityReport {
    bool equal;
    std::size_t fix_count;
    std::size_t image_count;
    /// (rank of y in Fix(N), rank of its constructed preimage z), one per
    /// element of Fix(N), built as in the surjectivity proof: z agrees
    /// with y through phi on Im(phi) and is 0 elsewhere.
    std::vector<std::pair<std::size_t, std::size_t>> witnesses;
};

/// Im(phi*) = Fix(ker phi), with explicit preimage witnesses.
FixEqualityReport phi_star_fix_report(const GroupHom& phi, Alphabet a,
                                      std::size_t budget = kDefaultConfigBudget);
bool phi_star_image_equals_fix(const GroupHom& phi, Alphabet a,
                               std::size_t budget = kDefaultConfigBudget);

} // namespace gca
