#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frontal/gcd.hpp"
#include "frontal/ideal.hpp"
#include "frontal/linear.hpp"
#include "frontal/polynomial.hpp"

namespace frontal {

// A polynomial map germ (C^n,0) -> (C^{n+1},0): one more component than
// source variables, every component vanishing at the origin.
struct MapGerm {
    VarContextPtr source;
    std::vector<Polynomial> components;

    MapGerm(VarContextPtr src, std::vector<Polynomial> comps)
        : source(std::move(src)), components(std::move(comps)) {
        if (components.size() != source->arity() + 1) {
            throw DomainError("map germ needs exactly one more component than source variables");
        }
        for (const auto& c : components) {
            if (!compatible(c.context(), source)) {
                throw ContextMismatchError("component context does not match the source");
            }
            if (c.constant_term() != 0) {
                throw DomainError("map germ components must vanish at the origin");
            }
        }
    }

    std::size_t source_dim() const { return source->arity(); }
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Rows are components, columns are source variables: entry (i,j) is df_i/dx_j.
inline PolyMatrix jacobian(const MapGerm& f) {
    const std::size_t n = f.source_dim();
    PolyMatrix out;
    out.reserve(f.components.size());
    for (const auto& comp : f.components) {
        std::vector<Polynomial> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) row.push_back(comp.derivative(j));
        out.push_back(std::move(row));
    }
    return out;
}

inline Polynomial poly_determinant(const PolyMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0 || m[0].size() != n) throw DomainError("determinant of non-square matrix");
    if (n == 1) return m[0][0];
    const VarContextPtr& ctx = m[0][0].context();
    Polynomial det = Polynomial::zero(ctx);
    // cofactor expansion along the first row
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) row.push_back(m[i][k]);
            }
            minor.push_back(std::move(row));
        }
        const Polynomial cof = m[0][j] * poly_determinant(minor);
        det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
}

namespace detail {

inline void index_subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& current,
                          std::size_t start, std::vector<std::vector<std::size_t>>& out) {
    if (current.size() == k) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        current.push_back(i);
        index_subsets(n, k, current, i + 1, out);
        current.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> current;
    index_subsets(n, k, current, 0, out);
    return out;
}

} // namespace detail

// All k x k minor determinants, enumerated lexicographically over the row
// index subsets, then the column index subsets.
inline std::vector<Polynomial> k_minors(const PolyMatrix& m, std::size_t k) {
    if (m.empty() || k == 0 || k > m.size() || k > m[0].size()) {
        throw DomainError("minor size out of range");
    }
    const auto row_sets = detail::index_subsets(m.size(), k);
    const auto col_sets = detail::index_subsets(m[0].size(), k);
    std::vector<Polynomial> out;
    out.reserve(row_sets.size() * col_sets.size());
    for (const auto& rows : row_sets) {
        for (const auto& cols : col_sets) {
            PolyMatrix sub;
            sub.reserve(k);
            for (std::size_t r : rows) {
                std::vector<Polynomial> row;
                row.reserve(k);
                for (std::size_t c : cols) row.push_back(m[r][c]);
                sub.push_back(std::move(row));
            }
            out.push_back(poly_determinant(sub));
        }
    }
    return out;
}

// Ideal generated by the n x n minors of the Jacobian.
inline Ideal ramification_ideal(const MapGerm& f) {
    return Ideal(f.source, k_minors(jacobian(f), f.source_dim()));
}

inline int corank_at_origin(const MapGerm& f) {
    const std::size_t n = f.source_dim();
    DenseMatrix linear(f.components.size(), std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < f.components.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            linear[i][j] = f.components[i].coeff(Monomial::unit(n, j));
        }
    }
    return static_cast<int>(n) - static_cast<int>(dense_rank(linear));
}

// Verdict of the principality test on the ramification ideal. The test runs
// in the polynomial ring: a Frontal answer and the monomial-coprimality
// certificate behind NotFrontalPolynomialCertificate are both sound in O_n,
// anything weaker degrades to Inconclusive rather than guessing.
struct FrontalityVerdict {
    enum class Status { Frontal, NotFrontalPolynomialCertificate, Inconclusive };

    Status status = Status::Inconclusive;
    std::optional<Polynomial> generator; // gcd of the minors, trailing coefficient 1
    std::vector<Polynomial> quotients;   // h_i = m_i / generator, aligned with the minors
    std::string note;

    bool frontal() const { return status == Status::Frontal; }
};

inline const char* to_string(FrontalityVerdict::Status s) {
    switch (s) {
        case FrontalityVerdict::Status::Frontal: return "frontal";
        case FrontalityVerdict::Status::NotFrontalPolynomialCertificate:
            return "not_frontal";
        case FrontalityVerdict::Status::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

inline FrontalityVerdict frontality_check(const MapGerm& f) {
    FrontalityVerdict verdict;
    const std::vector<Polynomial> minors = k_minors(jacobian(f), f.source_dim());

    std::vector<Polynomial> nonzero;
    for (const auto& m : minors) {
        if (!m.is_zero()) nonzero.push_back(m);
    }
    if (nonzero.empty()) {
        verdict.status = FrontalityVerdict::Status::Inconclusive;
        verdict.note = "all Jacobian minors vanish identically; the ramification ideal is zero";
        return verdict;
    }

    const Polynomial g = gcd_multivariate(nonzero);
    verdict.generator = g;
    for (const auto& m : minors) {
        if (m.is_zero()) {
            verdict.quotients.push_back(Polynomial::zero(f.source));
            continue;
        }
        auto h = divide_exact(m, g);
        if (!h) throw std::logic_error("gcd does not divide a minor");
        verdict.quotients.push_back(std::move(*h));
    }

    for (const auto& h : verdict.quotients) {
        if (!h.is_zero() && h.constant_term() != 0) {
            verdict.status = FrontalityVerdict::Status::Frontal;
            return verdict;
        }
    }

    // Every quotient vanishes at the origin. If one quotient is a monomial
    // and another quotient survives setting all of that monomial's variables
    // to zero, the two are coprime in O_n: a common divisor would have to be
    // a monomial factor of the first that also divides the second. Two
    // coprime non-units cannot sit in a proper principal ideal.
    for (const auto& hi : verdict.quotients) {
        if (hi.is_zero() || hi.terms().size() != 1) continue;
        const Monomial& mono = hi.terms().begin()->first;
        std::map<std::string, Polynomial> kill;
        for (std::size_t v = 0; v < f.source_dim(); ++v) {
            if (mono.exp(v) > 0) {
                kill.emplace(f.source->name(v), Polynomial::zero(f.source));
            }
        }
        for (const auto& hj : verdict.quotients) {
            if (&hj == &hi || hj.is_zero()) continue;
            if (!substitute(hj, kill, f.source).is_zero()) {
                verdict.status = FrontalityVerdict::Status::NotFrontalPolynomialCertificate;
                verdict.note = "the minor quotients contain two coprime non-units";
                return verdict;
            }
        }
    }

    verdict.status = FrontalityVerdict::Status::Inconclusive;
    verdict.note = "polynomial gcd cannot rule out a common power-series factor";
    return verdict;
}

} // namespace frontal
