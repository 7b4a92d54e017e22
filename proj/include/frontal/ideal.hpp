#pragma once

#include <optional>
#include <vector>

#include "frontal/polynomial.hpp"
#include "frontal/series.hpp"

namespace frontal {

// A finitely generated ideal in a variable context. When the generators came
// from truncated series, series_order records the shared truncation order so
// colength can refuse results that would depend on unknown tails. Every
// downstream result is insensitive to the generator order.
struct Ideal {
    VarContextPtr ctx;
    std::vector<Polynomial> generators;
    std::optional<int> series_order;

    Ideal(VarContextPtr context, std::vector<Polynomial> gens,
          std::optional<int> order = std::nullopt)
        : ctx(std::move(context)), generators(std::move(gens)), series_order(order) {
        if (generators.empty()) throw DomainError("ideal requires at least one generator");
        for (const auto& g : generators) {
            if (!compatible(g.context(), ctx)) {
                throw ContextMismatchError("ideal generators from different contexts");
            }
        }
    }
};

inline Ideal make_ideal(std::vector<Polynomial> gens) {
    if (gens.empty()) throw DomainError("ideal requires at least one generator");
    VarContextPtr ctx = gens.front().context();
    return Ideal(std::move(ctx), std::move(gens));
}

inline Ideal make_ideal(std::vector<TruncatedSeries> gens) {
    if (gens.empty()) throw DomainError("ideal requires at least one generator");
    VarContextPtr ctx = gens.front().context();
    int order = gens.front().order();
    std::vector<Polynomial> polys;
    polys.reserve(gens.size());
    for (const auto& s : gens) {
        order = std::min(order, s.order());
        polys.push_back(s.poly());
    }
    return Ideal(std::move(ctx), std::move(polys), order);
}

} // namespace frontal
