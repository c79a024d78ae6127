// Finite groups as explicit Cayley tables, with the identity pinned at
// element index 0, plus homomorphism enumeration and structural queries.

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gca/errors.hpp"

namespace gca {

/// Index of a group element inside its Cayley table.
using Elem = int;

/// Immutable finite group. Cheap to copy (shared table storage).
///
/// Construction validates the full set of group axioms exhaustively:
/// identity at index 0, associativity over all triples, two-sided
/// inverses. Anything that passes is a genuine group.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<Elem>> mul, std::string label);

    int order() const { return impl_->order; }
    Elem mul(Elem a, Elem b) const { return impl_->mul[static_cast<std::size_t>(a) * impl_->order + b]; }
    Elem inv(Elem a) const { return impl_->inv[a]; }
    const std::string& label() const { return impl_->label; }

    static constexpr Elem identity = 0;

    bool contains(Elem g) const { return g >= 0 && g < impl_->order; }
    int element_order(Elem g) const;
    bool is_abelian() const;

    /// Structural equality: same order and same multiplication table.
    /// The label is display metadata and does not participate.
    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

private:
    struct Impl {
        int order;
        std::vector<Elem> mul; // row-major order x order
        std::vector<Elem> inv;
        std::string label;
    };
    std::shared_ptr<const Impl> impl_;
};

FiniteGroup build_cyclic(int n);
FiniteGroup build_direct_product(const FiniteGroup& g, const FiniteGroup& h);
FiniteGroup build_dihedral(int n); // order 2n
FiniteGroup build_symmetric(int n); // n <= 5

/// Pair-to-index encoding used by build_direct_product: (i, j) -> i*|H| + j.
inline Elem product_index(Elem i, Elem j, int h_order) { return i * h_order + j; }

/// Verified group homomorphism, stored as an element-index map.
class GroupHom {
public:
    GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> map);

    Elem operator()(Elem h) const { return map_[h]; }
    const FiniteGroup& domain() const { return domain_; }
    const FiniteGroup& codomain() const { return codomain_; }
    const std::vector<Elem>& map() const { return map_; }

    bool is_bijective() const;
    bool is_injective() const;
    bool is_surjective() const;
    GroupHom inverse() const; // requires is_bijective()

    friend bool operator==(const GroupHom& a, const GroupHom& b);

private:
    FiniteGroup domain_;
    FiniteGroup codomain_;
    std::vector<Elem> map_;
};

GroupHom identity_hom(const FiniteGroup& g);
GroupHom trivial_hom(const FiniteGroup& domain, const FiniteGroup& codomain);

/// phi o psi. Requires codomain(psi) == domain(phi).
GroupHom compose_hom(const GroupHom& phi, const GroupHom& psi);

/// Product in End(G)^op: phi (.) psi = psi o phi.
GroupHom op_product(const GroupHom& phi, const GroupHom& psi);

inline constexpr std::size_t kDefaultHomSearchBudget = 50'000'000;

/// All homomorphisms H -> G in lexicographic order of their maps.
///
/// Backtracks over partial maps, assigning element images in index order
/// and pruning any assignment inconsistent with the multiplication table.
/// The budget bounds the nodes explored; exceeding it raises BudgetError.
std::vector<GroupHom> enumerate_homs(const FiniteGroup& h, const FiniteGroup& g,
                                     std::size_t budget = kDefaultHomSearchBudget);

/// Cross-validation oracle: filters all |G|^|H| maps by the homomorphism
/// law. Only for tiny instances (|G|^|H| <= budget).
std::vector<GroupHom> enumerate_homs_naive(const FiniteGroup& h, const FiniteGroup& g,
                                           std::size_t budget = 1'000'000);

std::vector<GroupHom> enumerate_end(const FiniteGroup& g,
                                    std::size_t budget = kDefaultHomSearchBudget);
std::vector<GroupHom> enumerate_aut(const FiniteGroup& g,
                                    std::size_t budget = kDefaultHomSearchBudget);

/// Sorted element sets, each verified to be closed under mul and inv.
std::vector<Elem> kernel(const GroupHom& phi);
std::vector<Elem> image(const GroupHom& phi);
std::vector<Elem> center(const FiniteGroup& g);

bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elems);
void require_subgroup(const FiniteGroup& g, std::span<const Elem> elems);

} // namespace gca
