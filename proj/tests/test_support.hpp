#pragma once

#include <random>
#include <string>
#include <vector>

#include "frontal/frontal.hpp"

namespace frontal::testing {

inline Polynomial P(const VarContextPtr& ctx, const std::string& text) {
    return parse_polynomial(text, ctx);
}

inline VarContextPtr ctx_uvw() { return make_context({"u", "v", "w"}); }
inline VarContextPtr ctx_xy() { return make_context({"x", "y"}); }

// Deterministic generators for the property suites.
class Rng {
public:
    explicit Rng(std::uint32_t seed) : engine_(seed) {}

    int uniform(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(engine_);
    }

    Rational rational(int span = 6) {
        const int num = uniform(-span, span);
        const int den = uniform(1, 3);
        return Rational(num, den);
    }

    Rational nonzero_rational(int span = 6) {
        for (;;) {
            Rational r = rational(span);
            if (r != 0) return r;
        }
    }

    Monomial monomial(std::size_t arity, int max_degree) {
        std::vector<std::uint32_t> exps(arity, 0);
        int budget = uniform(0, max_degree);
        for (int k = 0; k < budget; ++k) {
            exps[static_cast<std::size_t>(uniform(0, static_cast<int>(arity) - 1))] += 1;
        }
        return Monomial(exps);
    }

    Polynomial polynomial(const VarContextPtr& ctx, int max_terms, int max_degree) {
        Polynomial p = Polynomial::zero(ctx);
        const int terms = uniform(0, max_terms);
        for (int i = 0; i < terms; ++i) {
            p = p + Polynomial::term(ctx, monomial(ctx->arity(), max_degree), rational());
        }
        return p;
    }

    Polynomial nonzero_polynomial(const VarContextPtr& ctx, int max_terms, int max_degree) {
        for (;;) {
            Polynomial p = polynomial(ctx, max_terms, max_degree);
            if (!p.is_zero()) return p;
        }
    }

    // Random invertible rational matrix with small entries.
    DenseMatrix invertible_matrix(std::size_t n) {
        for (;;) {
            DenseMatrix m(n, std::vector<Rational>(n));
            for (auto& row : m) {
                for (auto& v : row) v = Rational(uniform(-3, 3));
            }
            if (dense_inverse(m)) return m;
        }
    }

    std::mt19937& engine() { return engine_; }

private:
    std::mt19937 engine_;
};

// Apply the linear substitution x_j -> sum_i m[j][i] * x_i to a polynomial.
inline Polynomial linear_substitution(const Polynomial& p, const DenseMatrix& m) {
    const VarContextPtr& ctx = p.context();
    const std::size_t n = ctx->arity();
    std::map<std::string, Polynomial> bindings;
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial image = Polynomial::zero(ctx);
        for (std::size_t i = 0; i < n; ++i) {
            if (m[j][i] != 0) image = image + Polynomial::variable(ctx, i).scaled(m[j][i]);
        }
        bindings.emplace(ctx->name(j), std::move(image));
    }
    return substitute(p, bindings, ctx);
}

inline Corank2Germ d4_normal_form() {
    auto ctx = ctx_uvw();
    return Corank2Germ(ctx, 1, P(ctx, "v*w"), P(ctx, "2*u*v + 3*v^2 + w^2"),
                       P(ctx, "u*v^2 + 2*v^3 + 2*v*w^2"));
}

inline Corank2Germ un_family(int n) {
    auto ctx = ctx_uvw();
    const std::string N = std::to_string(n);
    return Corank2Germ(ctx, 1, P(ctx, "v*w"), P(ctx, "2*u^" + N + "*v + 3*v^2 + w^2"),
                       P(ctx, "u^" + N + "*v^2 + 2*v^3 + 2*v*w^2"));
}

inline Corank2Germ d5_pullback(int n) {
    auto ctx = ctx_uvw();
    const std::string N = std::to_string(n);
    return Corank2Germ(ctx, 1, P(ctx, "v*w"),
                       P(ctx, "2*u^" + N + "*v + 3*u*v^2 + 4*v^3 + w^2"),
                       P(ctx, "u^" + N + "*v^2 + 2*u*v^3 + 3*v^4 + 2*v*w^2"));
}

} // namespace frontal::testing
