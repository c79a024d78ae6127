#include "gca/eca.hpp"

#include <algorithm>

#include "gca/automorphisms.hpp"

namespace gca {

EcaRule::EcaRule(int wolfram) : number_(wolfram) {
    if (wolfram < 0 || wolfram > 255)
        throw StructuralError("Wolfram number must lie in 0..255");
}

EcaRule eca_mirror(EcaRule rule) {
    int out = 0;
    for (int l = 0; l < 2; ++l)
        for (int c = 0; c < 2; ++c)
            for (int r = 0; r < 2; ++r)
                out |= rule.next(r, c, l) << (4 * l + 2 * c + r);
    return EcaRule(out);
}

std::vector<std::vector<int>> eca_run(EcaRule rule, int width, int steps,
                                      std::span<const int> initial) {
    if (width < 3)
        throw StructuralError("eca_run needs width >= 3");
    if (static_cast<int>(initial.size()) != width)
        throw StructuralError("initial row length differs from width");
    for (int v : initial)
        if (v != 0 && v != 1)
            throw StructuralError("initial row must be binary");

    std::vector<std::vector<int>> raster;
    raster.reserve(static_cast<std::size_t>(steps) + 1);
    raster.emplace_back(initial.begin(), initial.end());
    for (int t = 0; t < steps; ++t) {
        const auto& row = raster.back();
        std::vector<int> next(width);
        for (int i = 0; i < width; ++i)
            next[i] = rule.next(row[(i + width - 1) % width], row[i], row[(i + 1) % width]);
        raster.push_back(std::move(next));
    }
    return raster;
}

Gca eca_to_gca(EcaRule rule, const FiniteGroup& zn) {
    const int n = zn.order();
    if (n < 3)
        throw StructuralError("eca_to_gca needs a cyclic group of order >= 3");
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (zn.mul(a, b) != (a + b) % n)
                throw StructuralError("eca_to_gca expects the standard cyclic group");

    // Sorted memory {0, 1, n-1} reads (center, right, left), so the rule
    // entry for pattern digits (d0, d1, d2) is mu(l=d2, c=d0, r=d1).
    std::vector<Elem> memory{0, 1, n - 1};
    std::vector<int> table(8);
    for (int d0 = 0; d0 < 2; ++d0)
        for (int d1 = 0; d1 < 2; ++d1)
            for (int d2 = 0; d2 < 2; ++d2)
                table[4 * d0 + 2 * d1 + d2] = rule.next(d2, d0, d1);
    return Gca(identity_hom(zn), std::move(memory), std::move(table), Alphabet(2));
}

bool eca_raster_reversal_check(int width, int steps) {
    std::vector<int> row(width), reversed(width);
    for (int number = 0; number < 256; ++number) {
        const EcaRule rule(number);
        const EcaRule mirrored = eca_mirror(rule);
        for (int seed = 0; seed < (1 << width); ++seed) {
            for (int i = 0; i < width; ++i)
                row[i] = (seed >> (width - 1 - i)) & 1;
            std::reverse_copy(row.begin(), row.end(), reversed.begin());
            const auto straight = eca_run(rule, width, steps, row);
            const auto flipped = eca_run(mirrored, width, steps, reversed);
            for (int t = 0; t <= steps; ++t)
                for (int i = 0; i < width; ++i)
                    if (flipped[t][i] != straight[t][width - 1 - i])
                        return false;
        }
    }
    return true;
}

bool eca_mirror_matches_inversion(int n) {
    const FiniteGroup zn = build_cyclic(n);
    std::vector<Elem> inv_map(n);
    for (Elem k = 0; k < n; ++k)
        inv_map[k] = (n - k) % n;
    const GroupHom inversion(zn, zn, std::move(inv_map));

    for (int number = 0; number < 256; ++number) {
        const FunctionTable conjugated =
            phi_ca_table(inversion, to_table(eca_to_gca(EcaRule(number), zn)));
        const FunctionTable mirrored = to_table(eca_to_gca(eca_mirror(EcaRule(number)), zn));
        if (!(conjugated == mirrored))
            return false;
    }
    return true;
}

} // namespace gca
