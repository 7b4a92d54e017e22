#pragma once

#include <string>
#include <vector>

#include "frontal/map_germ.hpp"

namespace frontal {

// An exact invertible linear change of coordinates, recorded for reporting.
struct LinearChange {
    DenseMatrix matrix;

    bool is_identity() const {
        for (std::size_t i = 0; i < matrix.size(); ++i) {
            for (std::size_t j = 0; j < matrix.size(); ++j) {
                if (matrix[i][j] != Rational(i == j ? 1 : 0)) return false;
            }
        }
        return true;
    }

    static LinearChange identity(std::size_t n) {
        DenseMatrix m(n, std::vector<Rational>(n, Rational(0)));
        for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
        return LinearChange{std::move(m)};
    }
};

// The corank-2 normal form (u_1..u_d, p, q, r) with p, q, r in m^2. The two
// distinguished variables sit last in the context.
struct Corank2Germ {
    VarContextPtr ctx; // (u_1..u_d, v, w)
    std::size_t d;     // number of unfolding variables; ctx arity is d + 2
    Polynomial p, q, r;

    Corank2Germ(VarContextPtr context, std::size_t unfolding_dim, Polynomial pp, Polynomial qq,
                Polynomial rr)
        : ctx(std::move(context)), d(unfolding_dim), p(std::move(pp)), q(std::move(qq)),
          r(std::move(rr)) {
        if (ctx->arity() != d + 2) throw DomainError("corank-2 germ context arity mismatch");
        for (const Polynomial* g : {&p, &q, &r}) {
            if (!compatible(g->context(), ctx)) {
                throw ContextMismatchError("corank-2 germ component context mismatch");
            }
            if (!g->is_zero() && g->trailing_degree() < 2) {
                throw DomainError("p, q, r must have neither constant nor linear terms");
            }
        }
    }

    std::size_t v_index() const { return d; }
    std::size_t w_index() const { return d + 1; }

    MapGerm as_map_germ() const {
        std::vector<Polynomial> comps;
        comps.reserve(d + 3);
        for (std::size_t i = 0; i < d; ++i) comps.push_back(Polynomial::variable(ctx, i));
        comps.push_back(p);
        comps.push_back(q);
        comps.push_back(r);
        return MapGerm(ctx, std::move(comps));
    }
};

struct NormalizationResult {
    Corank2Germ germ;
    LinearChange source_change; // new source coordinates in terms of the old
    LinearChange target_change; // new components in terms of the old
};

// Bring a corank-2 germ into the normal form (u_1..u_{n-2}, p, q, r) using
// exact invertible linear changes only:
//   * target side: pick the components whose linear parts span the rank-(n-2)
//     image (greedy in component order) and subtract the matching combination
//     from the remaining three, which zeroes their linear parts;
//   * source side: send those n-2 independent linear forms to the first n-2
//     coordinates, keeping the non-pivot variables (first-nonzero pivoting in
//     context order) as v and w.
// Inputs already in normal form pass through unchanged. Components whose
// nonlinearity cannot be removed this way (an unfolding component like
// u + v^2) are rejected, since no linear change reaches the normal form.
inline NormalizationResult normalize_corank2(const MapGerm& f) {
    const std::size_t n = f.source_dim();
    if (n < 2) throw DomainError("corank-2 normalization needs at least two source variables");
    if (corank_at_origin(f) != 2) {
        throw DomainError("normalize_corank2 requires corank exactly 2 at the origin");
    }
    const std::size_t ncomp = f.components.size();
    const std::size_t dpar = n - 2;

    DenseMatrix linear(ncomp, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < ncomp; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            linear[i][j] = f.components[i].coeff(Monomial::unit(n, j));
        }
    }

    // Greedy row basis of the linear parts.
    std::vector<std::size_t> basis_rows, other_rows;
    {
        RowEchelon ech;
        for (std::size_t i = 0; i < ncomp; ++i) {
            SparseRow row;
            for (std::size_t j = 0; j < n; ++j) {
                if (linear[i][j] != 0) row.emplace_back(static_cast<int>(j), linear[i][j]);
            }
            if (!row.empty() && ech.add_row(std::move(row)) >= 0 && basis_rows.size() < dpar) {
                basis_rows.push_back(i);
            } else {
                other_rows.push_back(i);
            }
        }
    }
    if (basis_rows.size() != dpar) {
        throw DomainError("linear part rank does not match corank 2");
    }

    // Target change: new_i = f_{basis_i}; the remaining components get the
    // unique combination of basis components subtracted that kills their
    // linear part.
    DenseMatrix target(ncomp, std::vector<Rational>(ncomp, Rational(0)));
    std::vector<Polynomial> reordered;
    reordered.reserve(ncomp);
    for (std::size_t k = 0; k < dpar; ++k) {
        target[k][basis_rows[k]] = 1;
        reordered.push_back(f.components[basis_rows[k]]);
    }
    for (std::size_t k = 0; k < other_rows.size(); ++k) {
        const std::size_t i = other_rows[k];
        // solve linear[i] = sum_j c_j * linear[basis_j]
        LinearSolver solver;
        for (std::size_t col = 0; col < n; ++col) {
            SparseRow row;
            for (std::size_t j = 0; j < dpar; ++j) {
                const Rational& a = linear[basis_rows[j]][col];
                if (a != 0) row.emplace_back(static_cast<int>(j), a);
            }
            if (!solver.add_row(std::move(row), linear[i][col])) {
                throw std::logic_error("linear part not in the span of the basis rows");
            }
        }
        const std::vector<Rational> c = solver.solve(static_cast<int>(dpar));
        Polynomial comp = f.components[i];
        target[dpar + k][i] = 1;
        for (std::size_t j = 0; j < dpar; ++j) {
            if (c[j] != 0) {
                comp = comp - f.components[basis_rows[j]].scaled(c[j]);
                target[dpar + k][basis_rows[j]] = -c[j];
            }
        }
        reordered.push_back(std::move(comp));
    }

    // Source change: rows = the basis linear forms, completed by unit rows on
    // the non-pivot (free) columns.
    std::vector<std::size_t> free_cols;
    {
        DenseMatrix forms;
        for (std::size_t j = 0; j < dpar; ++j) forms.push_back(linear[basis_rows[j]]);
        const DenseMatrix reduced = dense_rref(std::move(forms));
        std::vector<bool> is_pivot(n, false);
        for (const auto& row : reduced) {
            for (std::size_t j = 0; j < n; ++j) {
                if (row[j] != 0) {
                    is_pivot[j] = true;
                    break;
                }
            }
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_pivot[j]) free_cols.push_back(j);
        }
    }
    if (free_cols.size() != 2) throw std::logic_error("expected exactly two free columns");

    DenseMatrix source(n, std::vector<Rational>(n, Rational(0)));
    std::vector<std::string> new_names;
    for (std::size_t j = 0; j < dpar; ++j) {
        source[j] = linear[basis_rows[j]];
    }
    source[dpar][free_cols[0]] = 1;
    source[dpar + 1][free_cols[1]] = 1;

    // Variable names for the normalized context: pivot-column names for the
    // unfolding variables, free-column names for v and w.
    {
        std::vector<bool> used(n, false);
        used[free_cols[0]] = used[free_cols[1]] = true;
        std::vector<std::size_t> pivot_cols;
        for (std::size_t j = 0; j < n; ++j) {
            if (!used[j]) pivot_cols.push_back(j);
        }
        for (std::size_t j = 0; j < dpar; ++j) new_names.push_back(f.source->name(pivot_cols[j]));
        new_names.push_back(f.source->name(free_cols[0]));
        new_names.push_back(f.source->name(free_cols[1]));
    }
    const VarContextPtr new_ctx = make_context(new_names);

    const auto source_inv = dense_inverse(source);
    if (!source_inv) throw std::logic_error("source change is not invertible");

    // old variable x_j = sum_i (S^{-1})_{j,i} * y_i
    std::map<std::string, Polynomial> bindings;
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial image = Polynomial::zero(new_ctx);
        for (std::size_t i = 0; i < n; ++i) {
            if ((*source_inv)[j][i] != 0) {
                image = image + Polynomial::variable(new_ctx, i).scaled((*source_inv)[j][i]);
            }
        }
        bindings.emplace(f.source->name(j), std::move(image));
    }

    std::vector<Polynomial> normalized;
    normalized.reserve(ncomp);
    for (const auto& comp : reordered) normalized.push_back(substitute(comp, bindings, new_ctx));

    for (std::size_t k = 0; k < dpar; ++k) {
        if (normalized[k] != Polynomial::variable(new_ctx, k)) {
            throw DomainError(
                "unfolding component '" + f.components[basis_rows[k]].str() +
                "' has nonlinear terms; the germ is not linearly reducible to normal form");
        }
    }
    for (std::size_t k = dpar; k < ncomp; ++k) {
        if (!normalized[k].is_zero() && normalized[k].trailing_degree() < 2) {
            throw std::logic_error("normalized p, q, r should have no linear part");
        }
    }

    Corank2Germ germ(new_ctx, dpar, normalized[dpar], normalized[dpar + 1], normalized[dpar + 2]);
    return NormalizationResult{std::move(germ), LinearChange{std::move(source)},
                               LinearChange{std::move(target)}};
}

} // namespace frontal
