#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frontal/errors.hpp"
#include "frontal/monomial.hpp"
#include "frontal/rational.hpp"
#include "frontal/var_context.hpp"

namespace frontal {

// Multivariate polynomial with exact rational coefficients over a fixed
// variable context. Canonical form: no stored coefficient is zero and terms
// are kept in the canonical monomial order, so two polynomials are equal iff
// their term maps are equal.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit Polynomial(VarContextPtr ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) throw std::invalid_argument("polynomial requires a context");
    }

    static Polynomial zero(VarContextPtr ctx) { return Polynomial(std::move(ctx)); }

    static Polynomial constant(VarContextPtr ctx, Rational c) {
        Polynomial p(std::move(ctx));
        p.add_term(Monomial(p.ctx_->arity()), std::move(c));
        return p;
    }

    static Polynomial variable(VarContextPtr ctx, std::size_t index) {
        Polynomial p(std::move(ctx));
        p.add_term(Monomial::unit(p.ctx_->arity(), index), Rational(1));
        return p;
    }

    static Polynomial variable(const VarContextPtr& ctx, std::string_view name) {
        auto idx = ctx->index_of(name);
        if (!idx) throw DomainError("variable '" + std::string(name) + "' not in context");
        return variable(ctx, *idx);
    }

    static Polynomial term(VarContextPtr ctx, Monomial m, Rational c) {
        Polynomial p(std::move(ctx));
        if (m.arity() != p.ctx_->arity()) throw ContextMismatchError("monomial arity mismatch");
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    const VarContextPtr& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
    }

    // Degree of the lowest-degree term; -1 for the zero polynomial.
    int trailing_degree() const {
        return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coeff(Monomial(ctx_->arity())); }

    // Highest term in the canonical order (requires nonzero).
    const std::pair<const Monomial, Rational>& leading_term() const {
        if (terms_.empty()) throw DomainError("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    // Lowest-degree, lexicographically-first term (requires nonzero).
    const std::pair<const Monomial, Rational>& trailing_term() const {
        if (terms_.empty()) throw DomainError("trailing term of zero polynomial");
        return *terms_.begin();
    }

    Polynomial operator-() const {
        Polynomial out(ctx_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }

    Polynomial operator+(const Polynomial& other) const {
        require_compatible(other);
        Polynomial out(*this);
        for (const auto& [m, c] : other.terms_) out.add_term(m, c);
        return out;
    }

    Polynomial operator-(const Polynomial& other) const {
        require_compatible(other);
        Polynomial out(*this);
        for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
        return out;
    }

    Polynomial operator*(const Polynomial& other) const {
        require_compatible(other);
        Polynomial out(ctx_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : other.terms_) {
                out.add_term(ma.times(mb), ca * cb);
            }
        }
        return out;
    }

    Polynomial scaled(const Rational& c) const {
        Polynomial out(ctx_);
        if (c == 0) return out;
        for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
        return out;
    }

    Polynomial times_monomial(const Monomial& m, const Rational& c = Rational(1)) const {
        Polynomial out(ctx_);
        if (c == 0) return out;
        for (const auto& [mm, k] : terms_) out.terms_.emplace(mm.times(m), k * c);
        return out;
    }

    Polynomial pow(std::uint32_t e) const {
        Polynomial out = constant(ctx_, Rational(1));
        Polynomial base(*this);
        while (e > 0) {
            if (e & 1u) out = out * base;
            e >>= 1u;
            if (e > 0) base = base * base;
        }
        return out;
    }

    bool operator==(const Polynomial& other) const {
        if (!compatible(ctx_, other.ctx_)) return false;
        return terms_ == other.terms_;
    }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    // Formal partial derivative with respect to a context variable.
    Polynomial derivative(std::size_t var) const {
        if (var >= ctx_->arity()) throw DomainError("derivative variable index out of range");
        Polynomial out(ctx_);
        for (const auto& [m, c] : terms_) {
            const std::uint32_t e = m.exp(var);
            if (e == 0) continue;
            std::vector<std::uint32_t> exps = m.exponents();
            exps[var] = e - 1;
            out.add_term(Monomial(std::move(exps)), c * Rational(e));
        }
        return out;
    }

    Polynomial derivative(std::string_view var_name) const {
        auto idx = ctx_->index_of(var_name);
        if (!idx) throw DomainError("unknown variable '" + std::string(var_name) + "'");
        return derivative(*idx);
    }

    // Discard all terms of total degree > max_degree.
    Polynomial truncated_at(int max_degree) const {
        Polynomial out(ctx_);
        for (const auto& [m, c] : terms_) {
            if (static_cast<int>(m.degree()) <= max_degree) out.terms_.emplace(m, c);
        }
        return out;
    }

    // Divide by the coefficient of the trailing term, so golden values do not
    // depend on incidental scalar factors.
    Polynomial monic_trailing() const {
        if (terms_.empty()) return *this;
        return scaled(Rational(1) / trailing_term().second);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            const bool negative = c < 0;
            const Rational mag = negative ? Rational(-c) : c;
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            std::string vars = monomial_str(m);
            if (vars.empty()) {
                os << rational_to_string(mag);
            } else if (mag == 1) {
                os << vars;
            } else {
                os << rational_to_string(mag) << "*" << vars;
            }
        }
        return os.str();
    }

private:
    void require_compatible(const Polynomial& other) const {
        if (!compatible(ctx_, other.ctx_)) {
            throw ContextMismatchError("polynomials from different variable contexts");
        }
    }

    void add_term(Monomial m, Rational c) {
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::string monomial_str(const Monomial& m) const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < m.arity(); ++i) {
            const std::uint32_t e = m.exp(i);
            if (e == 0) continue;
            if (!first) os << "*";
            first = false;
            os << ctx_->name(i);
            if (e > 1) os << "^" << e;
        }
        return os.str();
    }

    VarContextPtr ctx_;
    TermMap terms_;
};

// Compose p with the given variable bindings. Bound variables are replaced by
// the bound polynomials (which must all share one target context); variables
// of p left unbound must exist, by name, in the target context. When no
// binding is given the target context is p's own.
inline Polynomial substitute(const Polynomial& p,
                             const std::map<std::string, Polynomial>& bindings,
                             VarContextPtr target = nullptr) {
    for (const auto& [name, value] : bindings) {
        if (!p.context()->index_of(name)) {
            throw ContextMismatchError("bound variable '" + name + "' not in source context");
        }
        if (!target) target = value.context();
        if (!compatible(target, value.context())) {
            throw ContextMismatchError("bindings use different target contexts");
        }
    }
    if (!target) target = p.context();

    const std::size_t n = p.context()->arity();
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& name = p.context()->name(i);
        auto it = bindings.find(name);
        if (it != bindings.end()) {
            images.push_back(it->second);
        } else {
            auto idx = target->index_of(name);
            if (!idx) {
                throw ContextMismatchError("variable '" + name +
                                           "' is unbound and missing from the target context");
            }
            images.push_back(Polynomial::variable(target, *idx));
        }
    }

    Polynomial out = Polynomial::zero(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (m.exp(i) > 0) term = term * images[i].pow(m.exp(i));
        }
        out = out + term;
    }
    return out;
}

} // namespace frontal
