#pragma once

#include <array>
#include <map>
#include <vector>

#include "frontal/colength.hpp"
#include "frontal/corank2.hpp"
#include "frontal/gcd.hpp"
#include "frontal/linear.hpp"
#include "frontal/series.hpp"

namespace frontal {

// Truncated solutions of r_v = alpha*p_v + beta*q_v, r_w = alpha*p_w +
// beta*q_w, together with the unfolding coefficients lambda_i read off from
// the u-derivatives. `unique` records whether coefficient matching pinned
// every constrained coefficient (an unconstrained coefficient beyond the
// truncation horizon does not count against uniqueness).
struct FrontalCoefficients {
    TruncatedSeries alpha;
    TruncatedSeries beta;
    int order;
    bool unique;
    std::vector<TruncatedSeries> lambdas;
};

namespace detail {

struct AlphaBetaSystem {
    Polynomial pv, pw, qv, qw, rv, rw;
};

inline AlphaBetaSystem alpha_beta_system(const Corank2Germ& g) {
    const std::size_t v = g.v_index(), w = g.w_index();
    return AlphaBetaSystem{g.p.derivative(v), g.p.derivative(w), g.q.derivative(v),
                           g.q.derivative(w), g.r.derivative(v), g.r.derivative(w)};
}

} // namespace detail

// Solve the two coefficient equations for alpha and beta up to the requested
// truncation order.
//
// Fast path: when det = p_v*q_w - q_v*p_w is a nonzero polynomial that
// exactly divides both Cramer numerators, the solution is an exact
// polynomial and is returned truncated.
//
// General path: match coefficients degree by degree. Each monomial of degree
// t <= order yields one linear equation over the unknown coefficients of
// alpha and beta (only degrees < t can appear, because the four partials lie
// in m). Equations are inserted by increasing degree so an unsolvable degree
// is reported as such; underdetermined coefficients are resolved to the
// minimum-support solution (free unknowns zero) under the canonical order.
inline FrontalCoefficients recover_alpha_beta(const Corank2Germ& g, int order) {
    if (order < 1) throw DomainError("truncation order must be >= 1");
    const auto sys = detail::alpha_beta_system(g);
    const VarContextPtr& ctx = g.ctx;

    auto finish = [&](Polynomial alpha, Polynomial beta, bool unique) {
        TruncatedSeries a(std::move(alpha), order);
        TruncatedSeries b(std::move(beta), order);
        // Residual identity, checked exactly after every recovery.
        const Polynomial res_v = (sys.rv - (a.poly() * sys.pv + b.poly() * sys.qv)).truncated_at(order);
        const Polynomial res_w = (sys.rw - (a.poly() * sys.pw + b.poly() * sys.qw)).truncated_at(order);
        if (!res_v.is_zero() || !res_w.is_zero()) {
            throw std::logic_error("frontal coefficient residual does not vanish");
        }
        std::vector<TruncatedSeries> lambdas;
        for (std::size_t i = 0; i < g.d; ++i) {
            const Polynomial value =
                g.r.derivative(i) - (a.poly() * g.p.derivative(i) + b.poly() * g.q.derivative(i));
            lambdas.emplace_back(value, order);
        }
        return FrontalCoefficients{std::move(a), std::move(b), order, unique, std::move(lambdas)};
    };

    const Polynomial det = sys.pv * sys.qw - sys.qv * sys.pw;
    if (!det.is_zero()) {
        const Polynomial num_a = sys.rv * sys.qw - sys.qv * sys.rw;
        const Polynomial num_b = sys.pv * sys.rw - sys.rv * sys.pw;
        const auto alpha = divide_exact(num_a, det);
        const auto beta = divide_exact(num_b, det);
        if (alpha && beta) {
            return finish(*alpha, *beta, true);
        }
    }

    // Unknown layout: for each monomial kappa of degree <= order, in canonical
    // order, column 2k is alpha_kappa and column 2k+1 is beta_kappa.
    const std::vector<Monomial> unknowns = detail::monomials_up_to(ctx->arity(), order);
    std::map<Monomial, int, MonomialOrder> unknown_index;
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
        unknown_index.emplace(unknowns[i], static_cast<int>(i));
    }
    const int num_cols = static_cast<int>(2 * unknowns.size());

    struct EquationBuilder {
        std::map<Monomial, std::map<int, Rational>, MonomialOrder> rows;

        void accumulate(const Polynomial& partial, bool beta_block,
                        const std::vector<Monomial>& unknowns,
                        const std::map<Monomial, int, MonomialOrder>& unknown_index, int order) {
            for (const auto& [pm, pc] : partial.terms()) {
                for (const auto& kappa : unknowns) {
                    const Monomial target = pm.times(kappa);
                    if (static_cast<int>(target.degree()) > order) continue;
                    const int col = 2 * unknown_index.at(kappa) + (beta_block ? 1 : 0);
                    auto& row = rows[target];
                    auto it = row.find(col);
                    if (it == row.end()) {
                        row.emplace(col, pc);
                    } else {
                        it->second += pc;
                        if (it->second == 0) row.erase(it);
                    }
                }
            }
        }

        void add_rhs_monomials(const Polynomial& rhs) {
            for (const auto& [m, c] : rhs.terms()) rows[m]; // ensure an equation row exists
        }
    };

    EquationBuilder eq_v, eq_w;
    eq_v.accumulate(sys.pv, false, unknowns, unknown_index, order);
    eq_v.accumulate(sys.qv, true, unknowns, unknown_index, order);
    eq_v.add_rhs_monomials(sys.rv.truncated_at(order));
    eq_w.accumulate(sys.pw, false, unknowns, unknown_index, order);
    eq_w.accumulate(sys.qw, true, unknowns, unknown_index, order);
    eq_w.add_rhs_monomials(sys.rw.truncated_at(order));

    LinearSolver solver;
    for (int t = 0; t <= order; ++t) {
        for (const EquationBuilder* eq : {&eq_v, &eq_w}) {
            const Polynomial& rhs_poly = (eq == &eq_v) ? sys.rv : sys.rw;
            for (const auto& [mon, entries] : eq->rows) {
                if (static_cast<int>(mon.degree()) != t) continue;
                SparseRow row(entries.begin(), entries.end());
                if (!solver.add_row(std::move(row), rhs_poly.coeff(mon))) {
                    throw InconsistentSystemError(t);
                }
            }
        }
    }

    const std::vector<Rational> solution = solver.solve(num_cols);
    Polynomial alpha = Polynomial::zero(ctx);
    Polynomial beta = Polynomial::zero(ctx);
    for (std::size_t i = 0; i < unknowns.size(); ++i) {
        if (solution[2 * i] != 0) {
            alpha = alpha + Polynomial::term(ctx, unknowns[i], solution[2 * i]);
        }
        if (solution[2 * i + 1] != 0) {
            beta = beta + Polynomial::term(ctx, unknowns[i], solution[2 * i + 1]);
        }
    }
    return finish(std::move(alpha), std::move(beta), solver.all_touched_are_pivots());
}

// The wave-front criterion det M(0) != 0, with M(0) the matrix of
// (v,w)-derivatives of alpha and beta at the origin.
struct WavefrontCheck {
    bool holds = false;
    std::array<std::array<Rational, 2>, 2> m0{}; // rows: alpha then beta
    Rational det;
};

inline WavefrontCheck wavefront_check(const Corank2Germ& g, const FrontalCoefficients& coeffs) {
    if (coeffs.order < 1) throw DomainError("wavefront check needs coefficients of order >= 1");
    const std::size_t v = g.v_index(), w = g.w_index();
    const std::size_t n = g.ctx->arity();
    WavefrontCheck out;
    out.m0[0][0] = coeffs.alpha.poly().coeff(Monomial::unit(n, v));
    out.m0[0][1] = coeffs.alpha.poly().coeff(Monomial::unit(n, w));
    out.m0[1][0] = coeffs.beta.poly().coeff(Monomial::unit(n, v));
    out.m0[1][1] = coeffs.beta.poly().coeff(Monomial::unit(n, w));
    out.det = out.m0[0][0] * out.m0[1][1] - out.m0[0][1] * out.m0[1][0];
    out.holds = out.det != 0;
    return out;
}

} // namespace frontal
