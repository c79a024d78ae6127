#include "gca/automaton.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace gca {

namespace {

std::size_t checked_pow(int q, std::size_t exp, const char* what,
                        std::size_t budget = std::size_t{1} << 40) {
    std::size_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (v > budget / static_cast<std::size_t>(q))
            throw BudgetError(std::string(what) + " exceeds budget");
        v *= static_cast<std::size_t>(q);
    }
    return v;
}

} // namespace

Gca::Gca(GroupHom phi, std::vector<Elem> memory, std::vector<int> rule, Alphabet alphabet)
    : phi_(std::move(phi)), memory_(std::move(memory)), rule_(std::move(rule)),
      q_(alphabet.size) {
    const FiniteGroup& g = phi_.codomain();
    if (!std::is_sorted(memory_.begin(), memory_.end()) ||
        std::adjacent_find(memory_.begin(), memory_.end()) != memory_.end())
        throw StructuralError("memory set must be sorted and distinct");
    for (Elem s : memory_)
        if (!g.contains(s))
            throw StructuralError("memory element outside the domain group");
    const std::size_t expected = checked_pow(q_, memory_.size(), "local rule table");
    if (rule_.size() != expected)
        throw StructuralError("local rule table has wrong length");
    for (int v : rule_)
        if (v < 0 || v >= q_)
            throw StructuralError("local rule value out of alphabet range");
}

int Gca::local(const Config& x, Elem base) const {
    const FiniteGroup& g = domain_group();
    std::size_t rank = 0;
    for (Elem s : memory_)
        rank = rank * static_cast<std::size_t>(q_) + static_cast<std::size_t>(x.at(g.mul(base, s)));
    return rule_[rank];
}

Config apply(const Gca& tau, const Config& x) {
    if (!(x.group() == tau.domain_group()))
        throw StructuralError("apply: configuration group differs from automaton domain");
    if (x.alphabet_size() != tau.alphabet_size())
        throw StructuralError("apply: alphabet mismatch");
    const FiniteGroup& h = tau.codomain_group();
    std::vector<int> out(h.order());
    // (phi(h^-1) . x)(s) = x(phi(h) s), so each output cell reads the
    // pattern translated by phi(h).
    for (Elem e = 0; e < h.order(); ++e)
        out[e] = tau.local(x, tau.hom()(e));
    return Config(h, Alphabet(tau.alphabet_size()), std::move(out));
}

Gca phi_star(const GroupHom& phi, Alphabet a) {
    std::vector<int> rule(a.size);
    for (int s = 0; s < a.size; ++s)
        rule[s] = s;
    return Gca(phi, {FiniteGroup::identity}, std::move(rule), a);
}

Gca identity_gca(const FiniteGroup& g, Alphabet a) {
    return phi_star(identity_hom(g), a);
}

FunctionTable::FunctionTable(FiniteGroup domain, FiniteGroup codomain, Alphabet alphabet,
                             std::vector<int> flat_outputs)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), q_(alphabet.size),
      rows_(0), flat_(std::move(flat_outputs)) {
    rows_ = checked_pow(q_, static_cast<std::size_t>(domain_.order()), "function table");
    if (flat_.size() != rows_ * static_cast<std::size_t>(codomain_.order()))
        throw StructuralError("function table has wrong size");
    for (int v : flat_)
        if (v < 0 || v >= q_)
            throw StructuralError("function table symbol out of range");
}

FunctionTable to_table(const Gca& tau, std::size_t budget) {
    const FiniteGroup& g = tau.domain_group();
    const FiniteGroup& h = tau.codomain_group();
    const Alphabet a(tau.alphabet_size());
    const std::size_t rows = config_count(g, a, budget);

    // Translated supports per output cell, hoisted out of the row loop.
    std::vector<std::vector<Elem>> reads(h.order());
    for (Elem e = 0; e < h.order(); ++e) {
        const Elem base = tau.hom()(e);
        reads[e].reserve(tau.memory().size());
        for (Elem s : tau.memory())
            reads[e].push_back(g.mul(base, s));
    }

    std::vector<int> flat;
    flat.reserve(rows * static_cast<std::size_t>(h.order()));
    std::vector<int> x(g.order(), 0);
    const int q = a.size;
    for (std::size_t r = 0;; ++r) {
        for (Elem e = 0; e < h.order(); ++e) {
            std::size_t rank = 0;
            for (Elem pos : reads[e])
                rank = rank * static_cast<std::size_t>(q) + static_cast<std::size_t>(x[pos]);
            flat.push_back(tau.rule()[rank]);
        }
        if (r + 1 == rows)
            break;
        int i = g.order() - 1;
        while (x[i] == q - 1)
            x[i--] = 0;
        ++x[i];
    }
    return FunctionTable(g, h, a, std::move(flat));
}

FunctionTable identity_table(const FiniteGroup& g, Alphabet a, std::size_t budget) {
    const std::size_t rows = config_count(g, a, budget);
    std::vector<int> flat;
    flat.reserve(rows * static_cast<std::size_t>(g.order()));
    for (std::size_t r = 0; r < rows; ++r) {
        Config x = config_from_rank(g, a, r);
        flat.insert(flat.end(), x.symbols().begin(), x.symbols().end());
    }
    return FunctionTable(g, g, a, std::move(flat));
}

FunctionTable compose_tables(const FunctionTable& after, const FunctionTable& before) {
    if (!(before.codomain() == after.domain()) || before.alphabet_size() != after.alphabet_size())
        throw StructuralError("compose_tables: mismatched tables");
    std::vector<int> flat;
    flat.reserve(before.rows() * static_cast<std::size_t>(after.codomain().order()));
    for (std::size_t r = 0; r < before.rows(); ++r) {
        auto mid = after.row(before.row_rank(r));
        flat.insert(flat.end(), mid.begin(), mid.end());
    }
    return FunctionTable(before.domain(), after.codomain(), Alphabet(before.alphabet_size()),
                         std::move(flat));
}

bool is_injective_table(const FunctionTable& f) {
    std::unordered_set<std::size_t> seen;
    for (std::size_t r = 0; r < f.rows(); ++r)
        if (!seen.insert(f.row_rank(r)).second)
            return false;
    return true;
}

bool is_surjective_table(const FunctionTable& f) {
    const std::size_t target = config_count(f.codomain(), Alphabet(f.alphabet_size()));
    std::unordered_set<std::size_t> seen;
    for (std::size_t r = 0; r < f.rows(); ++r)
        seen.insert(f.row_rank(r));
    return seen.size() == target;
}

bool is_bijective_table(const FunctionTable& f) {
    return is_injective_table(f) && is_surjective_table(f);
}

std::optional<EquivarianceWitness> equivariance_counterexample(const FunctionTable& f,
                                                               const GroupHom& phi) {
    if (!(f.domain() == phi.codomain()) || !(f.codomain() == phi.domain()))
        throw StructuralError("equivariance: table and hom do not match");
    const FiniteGroup& g = f.domain();
    const FiniteGroup& h = f.codomain();
    const Alphabet a(f.alphabet_size());

    // Per h: the rank permutation of phi(h) . x on the domain side, and the
    // cell reads of h . y on the codomain side.
    for (Elem e = 0; e < h.order(); ++e) {
        const Elem ge = phi(e);
        const Elem gei = g.inv(ge);
        std::vector<Elem> dom_read(g.order());
        for (Elem c = 0; c < g.order(); ++c)
            dom_read[c] = g.mul(gei, c);
        const Elem ei = h.inv(e);
        std::vector<Elem> cod_read(h.order());
        for (Elem c = 0; c < h.order(); ++c)
            cod_read[c] = h.mul(ei, c);

        std::vector<int> shifted(g.order());
        for (std::size_t r = 0; r < f.rows(); ++r) {
            const Config x = config_from_rank(g, a, r);
            for (Elem c = 0; c < g.order(); ++c)
                shifted[c] = x.at(dom_read[c]);
            auto lhs_row = f.row(pattern_rank(shifted, a.size)); // f(phi(h) . x)
            auto fx = f.row(r);
            bool ok = true;
            for (Elem c = 0; c < h.order() && ok; ++c)
                ok = fx[cod_read[c]] == lhs_row[c]; // (h . f(x))(c) = f(x)(h^-1 c)
            if (!ok)
                return EquivarianceWitness{e, r};
        }
    }
    return std::nullopt;
}

bool is_phi_equivariant(const FunctionTable& f, const GroupHom& phi) {
    return !equivariance_counterexample(f, phi).has_value();
}

Recognition recognize(const FunctionTable& f, const GroupHom& phi) {
    if (auto witness = equivariance_counterexample(f, phi))
        return Recognition{std::nullopt, witness};

    const FiniteGroup& g = f.domain();
    const Elem e_h = FiniteGroup::identity;
    std::vector<Elem> memory(g.order());
    for (Elem s = 0; s < g.order(); ++s)
        memory[s] = s;
    // With S = G, full patterns coincide with configurations rank for
    // rank, and mu(z) = f(z)(e_H).
    std::vector<int> rule(f.rows());
    for (std::size_t r = 0; r < f.rows(); ++r)
        rule[r] = f.row(r)[e_h];

    Gca out(phi, std::move(memory), std::move(rule), Alphabet(f.alphabet_size()));
    if (!(to_table(out) == f))
        throw TheoremViolation("recognized automaton does not reproduce its table");
    return Recognition{std::move(out), std::nullopt};
}

namespace {

// Pattern positions whose digit can move the rule value. A position that
// never does is jointly irrelevant as well, so dropping all inessential
// positions at once is sound.
std::vector<bool> essential_positions(std::span<const int> rule, std::size_t n, int q) {
    std::vector<std::size_t> stride(n, 1);
    for (std::size_t j = n; j-- > 1;)
        stride[j - 1] = stride[j] * static_cast<std::size_t>(q);
    std::vector<bool> essential(n, false);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < rule.size() && !essential[j]; ++r) {
            if (static_cast<int>(r / stride[j]) % q != 0)
                continue;
            for (int v = 1; v < q && !essential[j]; ++v)
                essential[j] = rule[r] != rule[r + stride[j] * static_cast<std::size_t>(v)];
        }
    }
    return essential;
}

} // namespace

Gca minimize_memory(const Gca& tau, std::size_t budget) {
    const int q = tau.alphabet_size();
    const auto old_memory = tau.memory();
    const auto rule = tau.rule();
    const std::size_t n = old_memory.size();

    std::vector<std::size_t> stride(n, 1);
    for (std::size_t j = n; j-- > 1;)
        stride[j - 1] = stride[j] * static_cast<std::size_t>(q);
    const std::vector<bool> essential = essential_positions(rule, n, q);

    std::vector<Elem> memory;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < n; ++j)
        if (essential[j]) {
            memory.push_back(old_memory[j]);
            keep.push_back(j);
        }

    // New rule: evaluate the old rule on patterns zero-extended to S.
    const std::size_t new_len = checked_pow(q, keep.size(), "minimized rule table");
    std::vector<int> new_rule(new_len);
    std::vector<int> digits(keep.size(), 0);
    for (std::size_t r = 0; r < new_len; ++r) {
        std::size_t tmp = r;
        for (std::size_t j = keep.size(); j-- > 0;) {
            digits[j] = static_cast<int>(tmp % q);
            tmp /= q;
        }
        std::size_t old_rank = 0;
        for (std::size_t j = 0; j < keep.size(); ++j)
            old_rank += stride[keep[j]] * static_cast<std::size_t>(digits[j]);
        new_rule[r] = rule[old_rank];
    }

    Gca out(tau.hom(), std::move(memory), std::move(new_rule), Alphabet(q));

    if (!(to_table(out, budget) == to_table(tau, budget)))
        throw TheoremViolation("memory minimization changed the global function");
    // Removal-minimality: every kept position must stay essential in the
    // shrunk rule.
    const auto recheck = essential_positions(out.rule(), out.memory().size(), q);
    for (bool e : recheck)
        if (!e)
            throw TheoremViolation("minimized memory set is not removal-minimal");
    return out;
}

bool is_bijective(const Gca& tau, std::size_t budget) {
    return is_bijective_table(to_table(tau, budget));
}

Gca compose(const Gca& sigma, const Gca& tau, std::size_t budget) {
    // sigma : A^H -> A^K over psi : K -> H with memory S inside H.
    // tau   : A^G -> A^H over phi : H -> G with memory T inside G.
    if (!(sigma.domain_group() == tau.codomain_group()))
        throw StructuralError("compose: sigma domain differs from tau codomain");
    if (sigma.alphabet_size() != tau.alphabet_size())
        throw StructuralError("compose: alphabet mismatch");
    const GroupHom& phi = tau.hom();
    const GroupHom& psi = sigma.hom();
    const FiniteGroup& g = tau.domain_group();
    const Alphabet a(tau.alphabet_size());

    // Memory set phi(S)T = { phi(s) t : s in S, t in T }.
    std::set<Elem> mem_set;
    for (Elem s : sigma.memory())
        for (Elem t : tau.memory())
            mem_set.insert(g.mul(phi(s), t));
    std::vector<Elem> memory(mem_set.begin(), mem_set.end());

    // Rule by zero-extension: the theorem guarantees the output at e_K
    // depends only on the pattern over phi(S)T.
    const std::size_t len = checked_pow(a.size, memory.size(), "composed rule table");
    std::vector<int> rule(len);
    std::vector<int> base(g.order(), 0);
    for (std::size_t r = 0; r < len; ++r) {
        std::size_t tmp = r;
        std::vector<int> symbols = base;
        for (std::size_t j = memory.size(); j-- > 0;) {
            symbols[memory[j]] = static_cast<int>(tmp % a.size);
            tmp /= a.size;
        }
        Config xp(g, a, std::move(symbols));
        rule[r] = apply(sigma, apply(tau, xp)).at(FiniteGroup::identity);
    }

    Gca out(compose_hom(phi, psi), std::move(memory), std::move(rule), a);
    if (!(to_table(out, budget) == compose_tables(to_table(sigma, budget), to_table(tau, budget))))
        throw TheoremViolation("composed automaton does not match pointwise composition");
    return out;
}

Inversion invert(const Gca& tau, std::size_t budget) {
    const FunctionTable f = to_table(tau, budget);
    const FiniteGroup& g = tau.domain_group();
    const FiniteGroup& h = tau.codomain_group();
    const Alphabet a(tau.alphabet_size());

    // Injectivity scan with collision witness.
    std::unordered_map<std::size_t, std::size_t> first_seen;
    first_seen.reserve(f.rows());
    for (std::size_t r = 0; r < f.rows(); ++r) {
        auto [it, inserted] = first_seen.emplace(f.row_rank(r), r);
        if (!inserted) {
            InversionFailure fail;
            fail.collision = std::make_pair(it->second, r);
            return Inversion{std::nullopt, fail};
        }
    }
    const std::size_t cod_count = config_count(h, a, budget);
    if (first_seen.size() != cod_count) {
        for (std::size_t r = 0; r < cod_count; ++r) {
            if (!first_seen.count(r)) {
                InversionFailure fail;
                fail.missing = r;
                return Inversion{std::nullopt, fail};
            }
        }
    }

    // Bijective: phi must be an isomorphism, and the inverse table is a
    // phi^-1-cellular automaton.
    if (!tau.hom().is_bijective())
        throw TheoremViolation("bijective automaton with non-bijective hom");
    std::vector<int> flat(cod_count * static_cast<std::size_t>(g.order()));
    for (std::size_t r = 0; r < f.rows(); ++r) {
        const std::size_t image = f.row_rank(r);
        const Config x = config_from_rank(g, a, r);
        std::copy(x.symbols().begin(), x.symbols().end(),
                  flat.begin() + static_cast<std::ptrdiff_t>(image * g.order()));
    }
    FunctionTable inverse_table(h, g, a, std::move(flat));
    Recognition rec = recognize(inverse_table, tau.hom().inverse());
    if (!rec.ok())
        throw TheoremViolation("inverse of a bijective automaton was not recognized");

    const FunctionTable inv_f = to_table(*rec.automaton, budget);
    if (!(compose_tables(inv_f, f) == identity_table(g, a, budget)) ||
        !(compose_tables(f, inv_f) == identity_table(h, a, budget)))
        throw TheoremViolation("inverse does not round-trip to the identity");
    return Inversion{std::move(rec.automaton), std::nullopt};
}

bool image_subset_fix(const Gca& tau, std::size_t budget) {
    const FunctionTable f = to_table(tau, budget);
    const std::vector<Elem> n = kernel(tau.hom());
    const FiniteGroup& h = tau.codomain_group();
    const Alphabet a(tau.alphabet_size());
    for (std::size_t r = 0; r < f.rows(); ++r) {
        auto row = f.row(r);
        Config y(h, a, std::vector<int>(row.begin(), row.end()));
        for (Elem k : n)
            if (!(shift(k, y) == y))
                return false;
    }
    return true;
}

FixEqualityReport phi_star_fix_report(const GroupHom& phi, Alphabet a, std::size_t budget) {
    const FiniteGroup& h = phi.domain();
    const FiniteGroup& g = phi.codomain();
    const std::vector<Elem> n = kernel(phi);
    const std::vector<Elem> im = image(phi);

    const Gca star = phi_star(phi, a);
    const FunctionTable f = to_table(star, budget);

    std::set<std::size_t> image_ranks;
    for (std::size_t r = 0; r < f.rows(); ++r)
        image_ranks.insert(f.row_rank(r));

    FixEqualityReport report{true, 0, image_ranks.size(), {}};
    for (const Config& y : fix_subgroup(h, a, n, budget)) {
        ++report.fix_count;
        // Preimage construction from the proof: z(g) = y(h) for any h with
        // phi(h) = g when g lies in Im(phi), z(g) = 0 otherwise.
        std::vector<int> z(g.order(), 0);
        for (Elem gg : im) {
            for (Elem hh = 0; hh < h.order(); ++hh) {
                if (phi(hh) == gg) {
                    z[gg] = y.at(hh);
                    break;
                }
            }
        }
        const Config zc(g, a, std::move(z));
        if (!(apply(star, zc) == y)) {
            report.equal = false;
            continue;
        }
        report.witnesses.emplace_back(config_rank(y), config_rank(zc));
        if (!image_ranks.count(config_rank(y)))
            report.equal = false;
    }
    if (report.fix_count != report.image_count)
        report.equal = false;
    return report;
}

bool phi_star_image_equals_fix(const GroupHom& phi, Alphabet a, std::size_t budget) {
    return phi_star_fix_report(phi, a, budget).equal;
}

} // namespace gca
