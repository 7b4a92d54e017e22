#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace frontal {

// Exponent vector over a fixed variable context; the arity must match the
// context it is used with.
class Monomial {
public:
    explicit Monomial(std::size_t arity) : exps_(arity, 0), degree_(0) {}

    explicit Monomial(std::vector<std::uint32_t> exps)
        : exps_(std::move(exps)),
          degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0})) {}

    static Monomial unit(std::size_t arity, std::size_t var, std::uint32_t e = 1) {
        Monomial m(arity);
        m.exps_.at(var) = e;
        m.degree_ = e;
        return m;
    }

    std::size_t arity() const { return exps_.size(); }
    std::uint32_t exp(std::size_t i) const { return exps_.at(i); }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint32_t degree() const { return degree_; }
    bool is_constant() const { return degree_ == 0; }

    Monomial times(const Monomial& other) const {
        Monomial out(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
        out.degree_ += other.degree_;
        return out;
    }

    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] > other.exps_[i]) return false;
        }
        return true;
    }

    // Requires this->divides(other).
    Monomial quotient_of(const Monomial& other) const {
        Monomial out(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] > other.exps_[i]) throw std::logic_error("monomial quotient underflow");
            out.exps_[i] = other.exps_[i] - exps_[i];
        }
        out.degree_ = other.degree_ - degree_;
        return out;
    }

    Monomial gcd(const Monomial& other) const {
        Monomial out(exps_.size());
        std::uint32_t deg = 0;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            out.exps_[i] = std::min(exps_[i], other.exps_[i]);
            deg += out.exps_[i];
        }
        out.degree_ = deg;
        return out;
    }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return !(*this == other); }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_;
};

// Canonical order: total degree first, ties broken lexicographically by the
// context's variable order (higher power of an earlier variable first). The
// constant monomial is the minimum; within degree 2 over (u,v,w) the order is
// u^2, uv, uw, v^2, vw, w^2. This is a multiplicative global order, so leading
// terms multiply, and read in ascending sequence it matches how local-algebra
// computations list "large" (low-degree) monomials first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(),
                                            a.exponents().begin(), a.exponents().end());
    }
};

} // namespace frontal
