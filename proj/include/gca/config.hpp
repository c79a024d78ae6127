// Configurations x : G -> A over a finite group, the left shift action
// (g.x)(h) = x(g^-1 h), restrictions to supports, and periodic sets.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gca/group.hpp"

namespace gca {

struct Alphabet {
    int size;
    explicit Alphabet(int q) : size(q) {
        if (q < 2)
            throw StructuralError("alphabet must have at least two symbols");
    }
};

class Config {
public:
    Config(FiniteGroup group, Alphabet alphabet, std::vector<int> symbols);

    int at(Elem h) const { return symbols_[h]; }
    const FiniteGroup& group() const { return group_; }
    int alphabet_size() const { return q_; }
    const std::vector<int>& symbols() const { return symbols_; }

    friend bool operator==(const Config& a, const Config& b) {
        return a.q_ == b.q_ && a.symbols_ == b.symbols_ && a.group_ == b.group_;
    }

private:
    FiniteGroup group_;
    int q_;
    std::vector<int> symbols_;
};

/// A configuration restricted to a support: distinct sorted element
/// indices with the symbols read off in support order.
struct Pattern {
    std::vector<Elem> support;
    std::vector<int> symbols;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

Config shift(Elem g, const Config& x);
Pattern restrict_to(const Config& x, std::span<const Elem> support);
bool in_neighborhood(const Config& y, const Config& x, std::span<const Elem> support);
Config indicator_config(const FiniteGroup& g, Alphabet a, Elem at);

inline constexpr std::size_t kDefaultConfigBudget = std::size_t{1} << 20;

/// q^|G| if it fits in the budget, else BudgetError.
std::size_t config_count(const FiniteGroup& g, Alphabet a,
                         std::size_t budget = kDefaultConfigBudget);

/// Rank r in [0, q^|G|) decoded with element 0 as the most significant
/// digit, so ranks enumerate configurations in lexicographic order and
/// rank 0 is the all-zero configuration.
Config config_from_rank(const FiniteGroup& g, Alphabet a, std::size_t rank);
std::size_t config_rank(const Config& x);

std::size_t pattern_rank(std::span<const int> symbols, int q);

/// Lazy lexicographic enumeration of all of A^G.
class ConfigRange {
public:
    ConfigRange(FiniteGroup g, Alphabet a, std::size_t budget = kDefaultConfigBudget);

    class iterator {
    public:
        using value_type = Config;
        using difference_type = std::ptrdiff_t;

        iterator(const ConfigRange* range, std::size_t rank) : range_(range), rank_(rank) {}
        Config operator*() const;
        iterator& operator++() { ++rank_; return *this; }
        iterator operator++(int) { auto t = *this; ++rank_; return t; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.rank_ == b.rank_; }

    private:
        const ConfigRange* range_;
        std::size_t rank_;
    };

    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, count_); }
    std::size_t size() const { return count_; }

private:
    friend class iterator;
    FiniteGroup group_;
    Alphabet alphabet_;
    std::size_t count_;
};

inline ConfigRange enumerate_configs(const FiniteGroup& g, Alphabet a,
                                     std::size_t budget = kDefaultConfigBudget) {
    return ConfigRange(g, a, budget);
}

/// All K-periodic configurations (shift(k, x) = x for every k in K), in
/// lexicographic order. K is re-verified to be a subgroup on entry.
std::vector<Config> fix_subgroup(const FiniteGroup& g, Alphabet a, std::span<const Elem> k,
                                 std::size_t budget = kDefaultConfigBudget);

} // namespace gca
