#include "gca/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gca {

namespace {

std::vector<Elem> flatten_and_check(const std::vector<std::vector<Elem>>& mul, int n) {
    std::vector<Elem> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : mul) {
        if (static_cast<int>(row.size()) != n)
            throw StructuralError("Cayley table is not square");
        for (Elem e : row) {
            if (e < 0 || e >= n)
                throw StructuralError("Cayley table entry out of range");
            flat.push_back(e);
        }
    }
    return flat;
}

} // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Elem>> mul, std::string label) {
    const int n = static_cast<int>(mul.size());
    if (n == 0)
        throw StructuralError("group order must be positive");
    auto flat = flatten_and_check(mul, n);

    auto at = [&](Elem a, Elem b) { return flat[static_cast<std::size_t>(a) * n + b]; };

    for (Elem g = 0; g < n; ++g) {
        if (at(0, g) != g || at(g, 0) != g)
            throw StructuralError("element 0 is not a two-sided identity in \"" + label + "\"");
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (at(at(a, b), c) != at(a, at(b, c)))
                    throw StructuralError("multiplication is not associative in \"" + label + "\"");

    std::vector<Elem> inv(n, -1);
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            if (at(a, b) == 0 && at(b, a) == 0) {
                inv[a] = b;
                break;
            }
        }
        if (inv[a] < 0)
            throw StructuralError("element without a two-sided inverse in \"" + label + "\"");
    }

    auto impl = std::make_shared<Impl>();
    impl->order = n;
    impl->mul = std::move(flat);
    impl->inv = std::move(inv);
    impl->label = std::move(label);
    impl_ = std::move(impl);
}

int FiniteGroup::element_order(Elem g) const {
    if (!contains(g))
        throw StructuralError("element index out of range");
    Elem p = g;
    int k = 1;
    while (p != identity) {
        p = mul(p, g);
        ++k;
    }
    return k;
}

bool FiniteGroup::is_abelian() const {
    const int n = order();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a + 1; b < n; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.impl_ == b.impl_)
        return true;
    return a.impl_->order == b.impl_->order && a.impl_->mul == b.impl_->mul;
}

FiniteGroup build_cyclic(int n) {
    if (n < 1)
        throw StructuralError("cyclic group order must be >= 1");
    std::vector<std::vector<Elem>> mul(n, std::vector<Elem>(n));
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            mul[a][b] = (a + b) % n;
    return FiniteGroup(std::move(mul), "Z" + std::to_string(n));
}

FiniteGroup build_direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int ng = g.order(), nh = h.order();
    const int n = ng * nh;
    std::vector<std::vector<Elem>> mul(n, std::vector<Elem>(n));
    for (Elem a1 = 0; a1 < ng; ++a1)
        for (Elem a2 = 0; a2 < nh; ++a2)
            for (Elem b1 = 0; b1 < ng; ++b1)
                for (Elem b2 = 0; b2 < nh; ++b2)
                    mul[product_index(a1, a2, nh)][product_index(b1, b2, nh)] =
                        product_index(g.mul(a1, b1), h.mul(a2, b2), nh);
    return FiniteGroup(std::move(mul), g.label() + " x " + h.label());
}

FiniteGroup build_dihedral(int n) {
    if (n < 1)
        throw StructuralError("dihedral parameter must be >= 1");
    // Element eps*n + i encodes r^i s^eps with r^n = s^2 = e, s r s = r^-1.
    const int order = 2 * n;
    auto index = [n](int i, int eps) { return eps * n + ((i % n + n) % n); };
    std::vector<std::vector<Elem>> mul(order, std::vector<Elem>(order));
    for (int eps = 0; eps < 2; ++eps)
        for (int i = 0; i < n; ++i)
            for (int delta = 0; delta < 2; ++delta)
                for (int j = 0; j < n; ++j) {
                    const int a = index(i, eps), b = index(j, delta);
                    mul[a][b] = eps == 0 ? index(i + j, delta) : index(i - j, 1 - delta);
                }
    return FiniteGroup(std::move(mul), "D" + std::to_string(n));
}

FiniteGroup build_symmetric(int n) {
    if (n < 1)
        throw StructuralError("symmetric group parameter must be >= 1");
    if (n > 5)
        throw StructuralError("symmetric group bounded at n = 5 (order 120)");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<int>, Elem> index;
    for (std::size_t i = 0; i < perms.size(); ++i)
        index[perms[i]] = static_cast<Elem>(i);

    const int order = static_cast<int>(perms.size());
    std::vector<std::vector<Elem>> mul(order, std::vector<Elem>(order));
    std::vector<int> prod(n);
    for (Elem a = 0; a < order; ++a)
        for (Elem b = 0; b < order; ++b) {
            for (int i = 0; i < n; ++i)
                prod[i] = perms[a][perms[b][i]]; // (a*b)(i) = a(b(i))
            mul[a][b] = index[prod];
        }
    return FiniteGroup(std::move(mul), "S" + std::to_string(n));
}

GroupHom::GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
    const int nh = domain_.order();
    if (static_cast<int>(map_.size()) != nh)
        throw StructuralError("hom map length differs from domain order");
    for (Elem v : map_)
        if (!codomain_.contains(v))
            throw StructuralError("hom map value out of codomain range");
    if (map_[FiniteGroup::identity] != FiniteGroup::identity)
        throw StructuralError("hom does not send identity to identity");
    for (Elem a = 0; a < nh; ++a)
        for (Elem b = 0; b < nh; ++b)
            if (map_[domain_.mul(a, b)] != codomain_.mul(map_[a], map_[b]))
                throw StructuralError("map violates the homomorphism law");
}

bool GroupHom::is_bijective() const {
    return domain_.order() == codomain_.order() && is_injective();
}

bool GroupHom::is_injective() const {
    std::set<Elem> seen(map_.begin(), map_.end());
    return static_cast<int>(seen.size()) == domain_.order();
}

bool GroupHom::is_surjective() const {
    std::set<Elem> seen(map_.begin(), map_.end());
    return static_cast<int>(seen.size()) == codomain_.order();
}

GroupHom GroupHom::inverse() const {
    if (!is_bijective())
        throw StructuralError("inverse of a non-bijective hom");
    std::vector<Elem> inv(map_.size());
    for (Elem h = 0; h < static_cast<Elem>(map_.size()); ++h)
        inv[map_[h]] = h;
    return GroupHom(codomain_, domain_, std::move(inv));
}

bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.map_ == b.map_;
}

GroupHom identity_hom(const FiniteGroup& g) {
    std::vector<Elem> map(g.order());
    std::iota(map.begin(), map.end(), 0);
    return GroupHom(g, g, std::move(map));
}

GroupHom trivial_hom(const FiniteGroup& domain, const FiniteGroup& codomain) {
    return GroupHom(domain, codomain, std::vector<Elem>(domain.order(), FiniteGroup::identity));
}

GroupHom compose_hom(const GroupHom& phi, const GroupHom& psi) {
    if (!(psi.codomain() == phi.domain()))
        throw StructuralError("compose_hom: codomain of psi differs from domain of phi");
    std::vector<Elem> map(psi.domain().order());
    for (Elem k = 0; k < static_cast<Elem>(map.size()); ++k)
        map[k] = phi(psi(k));
    return GroupHom(psi.domain(), phi.codomain(), std::move(map));
}

GroupHom op_product(const GroupHom& phi, const GroupHom& psi) {
    return compose_hom(psi, phi);
}

namespace {

// Assigns images in element-index order; a candidate at position k is kept
// only if every product already inside the assigned prefix agrees with the
// multiplication tables. Ascending candidates make the output lexicographic.
struct HomSearch {
    const FiniteGroup& h;
    const FiniteGroup& g;
    std::size_t budget;
    std::size_t nodes = 0;
    std::vector<Elem> map;
    std::vector<GroupHom>* out;

    bool consistent(Elem k) const {
        const int nh = h.order();
        for (Elem a = 0; a <= k; ++a) {
            const Elem ak = h.mul(a, k);
            if (ak <= k && map[ak] != g.mul(map[a], map[k]))
                return false;
            const Elem ka = h.mul(k, a);
            if (ka <= k && map[ka] != g.mul(map[k], map[a]))
                return false;
        }
        // Products of earlier elements that land on k constrain it too.
        for (Elem a = 0; a < k; ++a)
            for (Elem b = 0; b < k; ++b)
                if (h.mul(a, b) == k && map[k] != g.mul(map[a], map[b]))
                    return false;
        (void)nh;
        return true;
    }

    void run(Elem k) {
        if (++nodes > budget)
            throw BudgetError("hom enumeration budget exceeded");
        if (k == h.order()) {
            out->push_back(GroupHom(h, g, map));
            return;
        }
        for (Elem c = 0; c < g.order(); ++c) {
            map[k] = c;
            if (consistent(k))
                run(k + 1);
        }
    }
};

} // namespace

std::vector<GroupHom> enumerate_homs(const FiniteGroup& h, const FiniteGroup& g,
                                     std::size_t budget) {
    std::vector<GroupHom> out;
    HomSearch search{h, g, budget, 0, std::vector<Elem>(h.order(), -1), &out};
    search.map[FiniteGroup::identity] = FiniteGroup::identity;
    search.run(1);
    return out;
}

std::vector<GroupHom> enumerate_homs_naive(const FiniteGroup& h, const FiniteGroup& g,
                                           std::size_t budget) {
    const int nh = h.order(), ng = g.order();
    double space = 1.0;
    for (int i = 0; i < nh; ++i)
        space *= ng;
    if (space > static_cast<double>(budget))
        throw BudgetError("naive hom filter budget exceeded");

    std::vector<GroupHom> out;
    std::vector<Elem> map(nh, 0);
    auto is_hom = [&]() {
        if (map[0] != 0)
            return false;
        for (Elem a = 0; a < nh; ++a)
            for (Elem b = 0; b < nh; ++b)
                if (map[h.mul(a, b)] != g.mul(map[a], map[b]))
                    return false;
        return true;
    };
    for (;;) {
        if (is_hom())
            out.push_back(GroupHom(h, g, map));
        int i = nh - 1;
        while (i >= 0 && map[i] == ng - 1)
            map[i--] = 0;
        if (i < 0)
            break;
        ++map[i];
    }
    return out;
}

std::vector<GroupHom> enumerate_end(const FiniteGroup& g, std::size_t budget) {
    return enumerate_homs(g, g, budget);
}

std::vector<GroupHom> enumerate_aut(const FiniteGroup& g, std::size_t budget) {
    std::vector<GroupHom> out;
    for (auto& hom : enumerate_end(g, budget))
        if (hom.is_bijective())
            out.push_back(std::move(hom));
    return out;
}

namespace {

std::vector<Elem> verified_sorted_set(const FiniteGroup& g, std::set<Elem> elems,
                                      const char* what) {
    std::vector<Elem> out(elems.begin(), elems.end());
    if (!is_subgroup(g, out))
        throw TheoremViolation(std::string(what) + " is not a subgroup");
    return out;
}

} // namespace

std::vector<Elem> kernel(const GroupHom& phi) {
    std::set<Elem> ker;
    for (Elem h = 0; h < phi.domain().order(); ++h)
        if (phi(h) == FiniteGroup::identity)
            ker.insert(h);
    return verified_sorted_set(phi.domain(), std::move(ker), "kernel");
}

std::vector<Elem> image(const GroupHom& phi) {
    std::set<Elem> im(phi.map().begin(), phi.map().end());
    return verified_sorted_set(phi.codomain(), std::move(im), "image");
}

std::vector<Elem> center(const FiniteGroup& g) {
    std::set<Elem> z;
    for (Elem a = 0; a < g.order(); ++a) {
        bool central = true;
        for (Elem b = 0; b < g.order() && central; ++b)
            central = g.mul(a, b) == g.mul(b, a);
        if (central)
            z.insert(a);
    }
    return verified_sorted_set(g, std::move(z), "center");
}

bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elems) {
    std::set<Elem> set(elems.begin(), elems.end());
    if (set.size() != elems.size())
        return false;
    for (Elem e : set)
        if (!g.contains(e))
            return false;
    if (!set.count(FiniteGroup::identity))
        return false;
    for (Elem a : set) {
        if (!set.count(g.inv(a)))
            return false;
        for (Elem b : set)
            if (!set.count(g.mul(a, b)))
                return false;
    }
    return true;
}

void require_subgroup(const FiniteGroup& g, std::span<const Elem> elems) {
    if (!is_subgroup(g, elems))
        throw StructuralError("element set is not a subgroup of " + g.label());
}

} // namespace gca
