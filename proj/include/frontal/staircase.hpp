#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "frontal/ideal.hpp"
#include "frontal/linear.hpp"

namespace frontal {

struct StaircaseResult {
    bool finite = false;
    long value = 0;
};

// Independent counting oracle for monomial ideals: enumerate the exponent
// vectors divisible by no generator. Every generator must be a single term
// (its coefficient is a unit and is ignored). The count is infinite exactly
// when some coordinate axis carries no pure-power generator.
inline StaircaseResult staircase_colength(const Ideal& ideal) {
    const std::size_t arity = ideal.ctx->arity();
    std::vector<Monomial> gens;
    for (const auto& g : ideal.generators) {
        if (g.is_zero()) continue;
        if (g.terms().size() != 1) {
            throw DomainError("staircase_colength requires monomial generators");
        }
        gens.push_back(g.terms().begin()->first);
    }
    if (gens.empty()) return StaircaseResult{false, 0};

    for (const auto& m : gens) {
        if (m.is_constant()) return StaircaseResult{true, 0}; // unit ideal
    }

    // Pure-power generators bound the staircase box per axis.
    std::vector<std::uint32_t> box(arity, 0);
    for (std::size_t i = 0; i < arity; ++i) {
        std::uint32_t best = 0;
        bool found = false;
        for (const auto& m : gens) {
            if (m.exp(i) == m.degree() && m.degree() > 0) {
                if (!found || m.exp(i) < best) best = m.exp(i);
                found = true;
            }
        }
        if (!found) return StaircaseResult{false, 0};
        box[i] = best;
    }

    long count = 0;
    std::vector<std::uint32_t> point(arity, 0);
    for (;;) {
        bool divisible = false;
        for (const auto& m : gens) {
            bool div = true;
            for (std::size_t i = 0; i < arity; ++i) {
                if (m.exp(i) > point[i]) {
                    div = false;
                    break;
                }
            }
            if (div) {
                divisible = true;
                break;
            }
        }
        if (!divisible) ++count;

        // advance the odometer over the box
        std::size_t i = 0;
        while (i < arity) {
            if (++point[i] < box[i]) break;
            point[i] = 0;
            ++i;
        }
        if (i == arity) break;
    }
    return StaircaseResult{true, count};
}

// Try to rewrite the ideal with monomial generators using only
// ideal-preserving moves: exact row reduction among the generators that are
// homogeneous linear forms, and, whenever a single variable x is itself a
// generator, replacing every other generator by its image under x -> 0.
// Returns nullopt when these moves do not reach a monomial generating set.
inline std::optional<Ideal> monomialize_by_linear_substitution(const Ideal& ideal) {
    const VarContextPtr& ctx = ideal.ctx;
    const std::size_t arity = ctx->arity();

    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators) {
        if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) return std::nullopt;

    auto is_pure_linear = [](const Polynomial& g) {
        return g.degree() == 1 && g.trailing_degree() == 1;
    };
    auto single_variable_of = [&](const Polynomial& g) -> std::optional<std::size_t> {
        if (g.terms().size() != 1) return std::nullopt;
        const Monomial& m = g.terms().begin()->first;
        if (m.degree() != 1) return std::nullopt;
        for (std::size_t i = 0; i < arity; ++i) {
            if (m.exp(i) == 1) return i;
        }
        return std::nullopt;
    };

    for (std::size_t round = 0; round <= arity + 1; ++round) {
        for (const auto& g : gens) {
            if (g.constant_term() != 0) {
                return make_ideal(std::vector<Polynomial>{
                    Polynomial::constant(ctx, Rational(1))});
            }
        }

        // Row-reduce the purely linear generators together.
        DenseMatrix rows;
        std::vector<Polynomial> rest;
        for (const auto& g : gens) {
            if (is_pure_linear(g)) {
                std::vector<Rational> row(arity, Rational(0));
                for (const auto& [m, c] : g.terms()) {
                    for (std::size_t i = 0; i < arity; ++i) {
                        if (m.exp(i) == 1) row[i] = c;
                    }
                }
                rows.push_back(std::move(row));
            } else {
                rest.push_back(g);
            }
        }
        if (!rows.empty()) {
            rows = dense_rref(std::move(rows));
            std::vector<Polynomial> rebuilt = std::move(rest);
            for (const auto& row : rows) {
                Polynomial g = Polynomial::zero(ctx);
                for (std::size_t i = 0; i < arity; ++i) {
                    if (row[i] != 0) {
                        g = g + Polynomial::variable(ctx, i).scaled(row[i]);
                    }
                }
                rebuilt.push_back(std::move(g));
            }
            gens = std::move(rebuilt);
        }

        // Substitute x -> 0 in the other generators for every generator that
        // is a single variable.
        std::set<std::size_t> zeroed;
        for (const auto& g : gens) {
            if (auto v = single_variable_of(g)) zeroed.insert(*v);
        }
        bool changed = false;
        if (!zeroed.empty()) {
            std::map<std::string, Polynomial> bindings;
            for (std::size_t v : zeroed) {
                bindings.emplace(ctx->name(v), Polynomial::zero(ctx));
            }
            std::vector<Polynomial> next;
            for (const auto& g : gens) {
                if (single_variable_of(g)) {
                    next.push_back(g);
                    continue;
                }
                Polynomial image = substitute(g, bindings, ctx);
                if (image != g) changed = true;
                if (!image.is_zero()) next.push_back(std::move(image));
                else changed = true;
            }
            for (std::size_t v : zeroed) next.push_back(Polynomial::variable(ctx, v));
            // keep exactly one copy of each single-variable generator
            std::vector<Polynomial> dedup;
            std::set<std::size_t> seen;
            for (auto& g : next) {
                if (auto v = single_variable_of(g)) {
                    if (!seen.insert(*v).second) continue;
                }
                dedup.push_back(std::move(g));
            }
            if (dedup.size() != gens.size()) changed = true;
            gens = std::move(dedup);
        }
        if (!changed && round > 0) break;
    }

    std::vector<Polynomial> monos;
    for (const auto& g : gens) {
        if (g.terms().size() != 1) return std::nullopt;
        monos.push_back(Polynomial::term(ctx, g.terms().begin()->first, Rational(1)));
    }
    std::sort(monos.begin(), monos.end(), [](const Polynomial& a, const Polynomial& b) {
        return MonomialOrder{}(a.terms().begin()->first, b.terms().begin()->first);
    });
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    return Ideal(ctx, std::move(monos), ideal.series_order);
}

} // namespace frontal
