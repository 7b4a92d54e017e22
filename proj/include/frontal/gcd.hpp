#pragma once

#include <map>
#include <optional>
#include <vector>

#include "frontal/polynomial.hpp"

namespace frontal {

// Exact single-divisor division. Repeatedly cancels the leading term of the
// running remainder against the leading term of the divisor; because the
// monomial order is multiplicative this terminates with a zero remainder
// exactly when b divides a in Q[x_1..x_n]. Returns nullopt otherwise.
inline std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (!compatible(a.context(), b.context())) {
        throw ContextMismatchError("division across variable contexts");
    }
    if (b.is_zero()) throw DomainError("division by the zero polynomial");
    Polynomial quotient = Polynomial::zero(a.context());
    Polynomial rem = a;
    const auto& [lb_mon, lb_coeff] = b.leading_term();
    while (!rem.is_zero()) {
        const auto& [lr_mon, lr_coeff] = rem.leading_term();
        if (!lb_mon.divides(lr_mon)) return std::nullopt;
        const Monomial q_mon = lb_mon.quotient_of(lr_mon);
        const Rational q_coeff = lr_coeff / lb_coeff;
        quotient = quotient + Polynomial::term(a.context(), q_mon, q_coeff);
        rem = rem - b.times_monomial(q_mon, q_coeff);
    }
    return quotient;
}

namespace detail {

inline int degree_in(const Polynomial& p, std::size_t var) {
    int d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, static_cast<int>(m.exp(var)));
    return d;
}

// View p as a univariate polynomial in `var`; the values are the coefficient
// polynomials (with the `var` exponent stripped, still in the full context).
inline std::map<std::uint32_t, Polynomial> coefficients_in(const Polynomial& p, std::size_t var) {
    std::map<std::uint32_t, Polynomial> out;
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> exps = m.exponents();
        const std::uint32_t e = exps[var];
        exps[var] = 0;
        auto it = out.find(e);
        if (it == out.end()) {
            it = out.emplace(e, Polynomial::zero(p.context())).first;
        }
        it->second = it->second + Polynomial::term(p.context(), Monomial(std::move(exps)), c);
    }
    return out;
}

inline Monomial monomial_content(const Polynomial& p) {
    Monomial g = p.trailing_term().first;
    for (const auto& [m, c] : p.terms()) g = g.gcd(m);
    return g;
}

inline Polynomial gcd_pair(const Polynomial& a, const Polynomial& b);

inline Polynomial gcd_list_nonzero(const std::vector<Polynomial>& ps) {
    Polynomial g = ps.front();
    for (std::size_t i = 1; i < ps.size(); ++i) {
        if (g.degree() == 0) break; // a unit already
        g = gcd_pair(g, ps[i]);
    }
    return g;
}

// Pseudo-remainder of f by g with respect to `var` (classic multiply-through
// form: some power of lc(g) times f, minus a multiple of g).
inline Polynomial pseudo_remainder(Polynomial f, const Polynomial& g, std::size_t var) {
    const int dg = degree_in(g, var);
    auto gc = coefficients_in(g, var);
    const Polynomial lead_g = gc.at(static_cast<std::uint32_t>(dg));
    int df = degree_in(f, var);
    while (!f.is_zero() && df >= dg) {
        auto fc = coefficients_in(f, var);
        const Polynomial lead_f = fc.at(static_cast<std::uint32_t>(df));
        const Monomial shift = Monomial::unit(f.context()->arity(), var,
                                              static_cast<std::uint32_t>(df - dg));
        f = f * lead_g - g.times_monomial(shift) * lead_f;
        df = degree_in(f, var);
    }
    return f;
}

// Divide out the polynomial content with respect to `var` and normalize the
// trailing coefficient to 1.
inline Polynomial primitive_part_in(const Polynomial& p, std::size_t var) {
    std::vector<Polynomial> coeffs;
    for (auto& [e, c] : coefficients_in(p, var)) coeffs.push_back(c);
    const Polynomial cont = gcd_list_nonzero(coeffs);
    auto q = divide_exact(p, cont);
    if (!q) throw std::logic_error("content must divide its polynomial");
    return q->monic_trailing();
}

// Primitive-PRS gcd of two nonzero polynomials with trivial monomial content.
inline Polynomial gcd_core(const Polynomial& a, const Polynomial& b) {
    if (a.degree() == 0 || b.degree() == 0) {
        return Polynomial::constant(a.context(), Rational(1));
    }

    // Main variable: present in both, smallest maximum degree (ties broken by
    // context order). If they share no variable the gcd is a unit.
    const std::size_t n = a.context()->arity();
    std::optional<std::size_t> main_var;
    int best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int da = degree_in(a, i);
        const int db = degree_in(b, i);
        if (da < 1 || db < 1) continue;
        const int score = std::max(da, db);
        if (!main_var || score < best) {
            main_var = i;
            best = score;
        }
    }
    if (!main_var) return Polynomial::constant(a.context(), Rational(1));
    const std::size_t x = *main_var;

    std::vector<Polynomial> ac, bc;
    for (auto& [e, c] : coefficients_in(a, x)) ac.push_back(c);
    for (auto& [e, c] : coefficients_in(b, x)) bc.push_back(c);
    const Polynomial cont_a = gcd_list_nonzero(ac);
    const Polynomial cont_b = gcd_list_nonzero(bc);
    Polynomial f = *divide_exact(a, cont_a);
    Polynomial g = *divide_exact(b, cont_b);
    if (degree_in(f, x) < degree_in(g, x)) std::swap(f, g);

    while (!g.is_zero()) {
        Polynomial r = pseudo_remainder(f, g, x);
        f = g;
        g = r.is_zero() ? r : primitive_part_in(r, x);
    }

    const Polynomial cont_g = gcd_pair(cont_a, cont_b);
    return cont_g * primitive_part_in(f, x);
}

inline Polynomial gcd_pair(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic_trailing();
    if (b.is_zero()) return a.monic_trailing();
    const Monomial ma = monomial_content(a);
    const Monomial mb = monomial_content(b);
    const Monomial mg = ma.gcd(mb);
    const auto a1 = divide_exact(a, Polynomial::term(a.context(), ma, Rational(1)));
    const auto b1 = divide_exact(b, Polynomial::term(b.context(), mb, Rational(1)));
    const Polynomial core = gcd_core(*a1, *b1);
    return core.times_monomial(mg).monic_trailing();
}

} // namespace detail

// Greatest common divisor in Q[x_1..x_n], normalized so the trailing
// (lowest-degree, lexicographically-first) coefficient is 1. At least one
// input must be nonzero. Note this is gcd in the polynomial ring: a factor
// that only exists in the convergent-power-series ring is invisible here, so
// principality tests built on it stay on the sound side (see
// frontality_check).
inline Polynomial gcd_multivariate(const std::vector<Polynomial>& ps) {
    if (ps.empty()) throw DomainError("gcd of an empty list");
    std::vector<Polynomial> nonzero;
    for (const auto& p : ps) {
        if (!p.is_zero()) nonzero.push_back(p);
    }
    if (nonzero.empty()) throw DomainError("gcd of all-zero inputs");
    for (std::size_t i = 1; i < nonzero.size(); ++i) {
        if (!compatible(nonzero[i].context(), nonzero[0].context())) {
            throw ContextMismatchError("gcd across variable contexts");
        }
    }
    return detail::gcd_list_nonzero(nonzero).monic_trailing();
}

inline Polynomial gcd_multivariate(const Polynomial& a, const Polynomial& b) {
    return gcd_multivariate(std::vector<Polynomial>{a, b});
}

} // namespace frontal
