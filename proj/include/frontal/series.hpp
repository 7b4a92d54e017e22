#pragma once

#include "frontal/polynomial.hpp"

namespace frontal {

// A polynomial representative of a germ known modulo m^{order+1}: the stored
// polynomial has no term of degree > order. Arithmetic propagates the worst
// (smallest) order of its inputs.
class TruncatedSeries {
public:
    TruncatedSeries(Polynomial poly, int order)
        : poly_(poly.truncated_at(order)), order_(order) {
        if (order < 0) throw DomainError("series order must be >= 0");
    }

    const Polynomial& poly() const { return poly_; }
    int order() const { return order_; }
    const VarContextPtr& context() const { return poly_.context(); }
    bool is_zero() const { return poly_.is_zero(); }

    TruncatedSeries operator+(const TruncatedSeries& other) const {
        const int d = std::min(order_, other.order_);
        return TruncatedSeries(poly_ + other.poly_, d);
    }

    TruncatedSeries operator-(const TruncatedSeries& other) const {
        const int d = std::min(order_, other.order_);
        return TruncatedSeries(poly_ - other.poly_, d);
    }

    TruncatedSeries operator*(const TruncatedSeries& other) const {
        const int d = std::min(order_, other.order_);
        return TruncatedSeries(poly_ * other.poly_, d);
    }

    // Multiplication by an exact polynomial keeps the order.
    TruncatedSeries times(const Polynomial& p) const {
        return TruncatedSeries(poly_ * p, order_);
    }

    TruncatedSeries operator-() const { return TruncatedSeries(-poly_, order_); }

    // Differentiation loses one order of knowledge.
    TruncatedSeries derivative(std::size_t var) const {
        if (order_ < 1) throw DomainError("cannot differentiate a series of order 0");
        return TruncatedSeries(poly_.derivative(var), order_ - 1);
    }

    bool operator==(const TruncatedSeries& other) const {
        return order_ == other.order_ && poly_ == other.poly_;
    }

private:
    Polynomial poly_;
    int order_;
};

inline TruncatedSeries truncate(const Polynomial& p, int order) {
    return TruncatedSeries(p, order);
}

} // namespace frontal
