// Elementary cellular automata on cyclic windows: Wolfram numbering, the
// mirrored rule, space-time rasters, and the bridge onto Z_n that realizes
// the mirror as conjugation by the inversion automorphism.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gca/automaton.hpp"

namespace gca {

/// Wolfram convention: neighborhood (l, c, r) indexes bit 4l + 2c + r.
class EcaRule {
public:
    explicit EcaRule(int wolfram);

    int number() const { return number_; }
    int next(int l, int c, int r) const { return (number_ >> (4 * l + 2 * c + r)) & 1; }

    friend bool operator==(const EcaRule&, const EcaRule&) = default;

private:
    int number_;
};

/// The reflection conjugate: mu'(l, c, r) = mu(r, c, l).
EcaRule eca_mirror(EcaRule rule);

/// steps+1 rows, cyclic boundary, width >= 3.
std::vector<std::vector<int>> eca_run(EcaRule rule, int width, int steps,
                                      std::span<const int> initial);

/// The rule as a {0,1}-automaton on Z_n (n >= 3) with memory {-1, 0, +1}.
/// The group must be the standard cyclic group of order n.
Gca eca_to_gca(EcaRule rule, const FiniteGroup& zn);

/// Reversing the initial row and running the mirror equals running the
/// rule and reversing the raster. Checked for all 256 rules and all
/// initial rows of the given width.
bool eca_raster_reversal_check(int width, int steps);

/// On Z_n the mirrored rule coincides with conjugation of the rule's
/// automaton by inversion*: (inv^-1)* o tau o inv*. Checked for all 256
/// rules.
bool eca_mirror_matches_inversion(int n);

} // namespace gca
