#pragma once

#include <map>
#include <string>
#include <vector>

#include "frontal/ideal.hpp"
#include "frontal/linear.hpp"

namespace frontal {

enum class ColengthStatus {
    Finite,
    Infinite,      // the stopping criterion never fired up to the degree bound
    OrderTooSmall, // it fired, but beyond what truncated generators certify
};

// Dimension of O_n/I as a vector space, with the certificate that makes the
// answer trustworthy: the degree at which the stopping criterion fired and
// the standard monomials spanning the quotient.
struct ColengthResult {
    ColengthStatus status = ColengthStatus::Infinite;
    long value = 0;              // meaningful only when Finite
    int stabilization_degree = 0; // criterion degree when Finite, the bound otherwise
    std::vector<Monomial> basis; // standard monomials, empty unless Finite

    bool finite() const { return status == ColengthStatus::Finite; }
};

namespace detail {

// All monomials of total degree <= bound, listed in the canonical order
// (degree ascending, earlier-variable powers first within a degree).
inline void append_monomials_of_degree(std::size_t arity, std::uint32_t degree,
                                       std::vector<std::uint32_t>& prefix,
                                       std::vector<Monomial>& out) {
    const std::size_t pos = prefix.size();
    if (pos + 1 == arity) {
        prefix.push_back(degree);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (std::uint32_t e = degree; e + 1 != 0; --e) {
        prefix.push_back(e);
        append_monomials_of_degree(arity, degree - e, prefix, out);
        prefix.pop_back();
    }
}

inline std::vector<Monomial> monomials_up_to(std::size_t arity, int bound) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> prefix;
    for (int d = 0; d <= bound; ++d) {
        append_monomials_of_degree(arity, static_cast<std::uint32_t>(d), prefix, out);
    }
    return out;
}

} // namespace detail

// Colength (quotient dimension) of an ideal that is expected to be m-primary.
//
// For D = 1, 2, ..., max_degree this spans, inside polynomials-mod-degree->D,
// the space W_D generated by mon*g over all generators g and monomials mon of
// degree <= D; W_D is exactly the image of the ideal modulo m^{D+1}. If every
// monomial of degree D lands in W_D then m^D <= I + m^{D+1}, which by
// Nakayama forces m^D <= I, so the quotient is spanned by the monomials of
// degree < D outside the pivot set and enumeration can stop. A generator with
// a nonzero constant term short-circuits to the unit ideal.
//
// When the bound is reached without the criterion firing the result is
// flagged Infinite; the caller cannot distinguish "not m-primary" from
// "bound too small" except by retrying with a larger bound (the CLI retries
// once with the bound doubled). For generators only known to a truncation
// order o, a firing degree D with D + 1 > o is reported OrderTooSmall.
inline ColengthResult colength(const Ideal& ideal, int max_degree = 24) {
    if (max_degree < 1) throw DomainError("max_degree must be >= 1");
    const std::size_t arity = ideal.ctx->arity();

    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators) {
        if (g.is_zero()) continue;
        if (g.constant_term() != 0) {
            return ColengthResult{ColengthStatus::Finite, 0, 0, {}};
        }
        gens.push_back(g);
    }
    if (gens.empty()) {
        return ColengthResult{ColengthStatus::Infinite, 0, max_degree, {}};
    }

    for (int D = 1; D <= max_degree; ++D) {
        const std::vector<Monomial> cols = detail::monomials_up_to(arity, D);
        std::map<Monomial, int, MonomialOrder> col_index;
        for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], static_cast<int>(i));

        RowEchelon ech;
        for (const auto& g : gens) {
            const int tail = g.trailing_degree();
            for (const auto& mon : cols) {
                if (static_cast<int>(mon.degree()) + tail > D) continue;
                SparseRow row;
                for (const auto& [m, c] : g.terms()) {
                    const Monomial prod = m.times(mon);
                    if (static_cast<int>(prod.degree()) > D) continue;
                    row.emplace_back(col_index.at(prod), c);
                }
                // Term maps iterate in canonical order and multiplication by a
                // fixed monomial preserves it, so the row arrives sorted.
                ech.add_row(std::move(row));
            }
        }

        bool top_degree_covered = true;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (static_cast<int>(cols[i].degree()) == D && !ech.has_pivot(static_cast<int>(i))) {
                top_degree_covered = false;
                break;
            }
        }
        if (!top_degree_covered) continue;

        ColengthResult result;
        result.stabilization_degree = D;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (!ech.has_pivot(static_cast<int>(i))) result.basis.push_back(cols[i]);
        }
        result.value = static_cast<long>(result.basis.size());
        if (ideal.series_order && D + 1 > *ideal.series_order) {
            result.status = ColengthStatus::OrderTooSmall;
            result.basis.clear();
        } else {
            result.status = ColengthStatus::Finite;
        }
        return result;
    }

    return ColengthResult{ColengthStatus::Infinite, 0, max_degree, {}};
}

} // namespace frontal
