#include "gca/config.hpp"

#include <algorithm>

namespace gca {

Config::Config(FiniteGroup group, Alphabet alphabet, std::vector<int> symbols)
    : group_(std::move(group)), q_(alphabet.size), symbols_(std::move(symbols)) {
    if (static_cast<int>(symbols_.size()) != group_.order())
        throw StructuralError("configuration length differs from group order");
    for (int s : symbols_)
        if (s < 0 || s >= q_)
            throw StructuralError("configuration symbol out of alphabet range");
}

Config shift(Elem g, const Config& x) {
    const FiniteGroup& grp = x.group();
    if (!grp.contains(g))
        throw StructuralError("shift element out of range");
    std::vector<int> out(x.symbols().size());
    const Elem gi = grp.inv(g);
    for (Elem h = 0; h < grp.order(); ++h)
        out[h] = x.at(grp.mul(gi, h));
    return Config(grp, Alphabet(x.alphabet_size()), std::move(out));
}

Pattern restrict_to(const Config& x, std::span<const Elem> support) {
    Pattern p;
    p.support.assign(support.begin(), support.end());
    if (!std::is_sorted(p.support.begin(), p.support.end()) ||
        std::adjacent_find(p.support.begin(), p.support.end()) != p.support.end())
        throw StructuralError("support must be sorted and distinct");
    p.symbols.reserve(p.support.size());
    for (Elem s : p.support) {
        if (!x.group().contains(s))
            throw StructuralError("support element out of range");
        p.symbols.push_back(x.at(s));
    }
    return p;
}

bool in_neighborhood(const Config& y, const Config& x, std::span<const Elem> support) {
    if (!(x.group() == y.group()) || x.alphabet_size() != y.alphabet_size())
        throw StructuralError("in_neighborhood: mismatched group or alphabet");
    return restrict_to(x, support) == restrict_to(y, support);
}

Config indicator_config(const FiniteGroup& g, Alphabet a, Elem at) {
    if (!g.contains(at))
        throw StructuralError("indicator element out of range");
    std::vector<int> symbols(g.order(), 0);
    symbols[at] = 1;
    return Config(g, a, std::move(symbols));
}

std::size_t config_count(const FiniteGroup& g, Alphabet a, std::size_t budget) {
    std::size_t count = 1;
    for (int i = 0; i < g.order(); ++i) {
        if (count > budget / static_cast<std::size_t>(a.size))
            throw BudgetError("configuration space exceeds budget");
        count *= static_cast<std::size_t>(a.size);
    }
    if (count > budget)
        throw BudgetError("configuration space exceeds budget");
    return count;
}

Config config_from_rank(const FiniteGroup& g, Alphabet a, std::size_t rank) {
    std::vector<int> symbols(g.order());
    for (int i = g.order() - 1; i >= 0; --i) {
        symbols[i] = static_cast<int>(rank % a.size);
        rank /= a.size;
    }
    return Config(g, a, std::move(symbols));
}

std::size_t config_rank(const Config& x) {
    return pattern_rank(x.symbols(), x.alphabet_size());
}

std::size_t pattern_rank(std::span<const int> symbols, int q) {
    std::size_t rank = 0;
    for (int s : symbols)
        rank = rank * static_cast<std::size_t>(q) + static_cast<std::size_t>(s);
    return rank;
}

ConfigRange::ConfigRange(FiniteGroup g, Alphabet a, std::size_t budget)
    : group_(std::move(g)), alphabet_(a), count_(config_count(group_, a, budget)) {}

Config ConfigRange::iterator::operator*() const {
    return config_from_rank(range_->group_, range_->alphabet_, rank_);
}

std::vector<Config> fix_subgroup(const FiniteGroup& g, Alphabet a, std::span<const Elem> k,
                                 std::size_t budget) {
    require_subgroup(g, k);
    std::vector<Config> out;
    for (const Config& x : enumerate_configs(g, a, budget)) {
        bool fixed = true;
        for (Elem e : k) {
            if (!(shift(e, x) == x)) {
                fixed = false;
                break;
            }
        }
        if (fixed)
            out.push_back(x);
    }
    return out;
}

} // namespace gca
