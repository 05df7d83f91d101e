#pragma once

#include <optional>

#include "crat/numeric.hpp"

namespace crat {

/// Element of Z[sqrt(2)]: a + b*sqrt(2) with integer a, b.
struct Quad {
    Int a;
    Int b;

    Quad() : a(0), b(0) {}
    Quad(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool operator==(const Quad&) const = default;
    bool is_zero() const { return a == 0 && b == 0; }
};

Quad quad_add(const Quad& x, const Quad& y);
Quad quad_sub(const Quad& x, const Quad& y);
Quad quad_mul(const Quad& x, const Quad& y);
Quad quad_neg(const Quad& x);

/// Field norm a^2 - 2 b^2. Zero only for the zero element.
Int quad_norm(const Quad& x);

/// Exact quotient x / d in Z[sqrt(2)] when d divides x, nullopt otherwise.
std::optional<Quad> quad_div_exact(const Quad& x, const Quad& d);

/// Element of Q(sqrt(2)): exact field arithmetic for internal computations.
struct QuadQ {
    Rat a;
    Rat b;

    QuadQ() : a(0), b(0) {}
    QuadQ(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit QuadQ(const Quad& q) : a(q.a), b(q.b) {}

    bool operator==(const QuadQ&) const = default;
    bool is_zero() const { return a == 0 && b == 0; }
};

QuadQ qq_add(const QuadQ& x, const QuadQ& y);
QuadQ qq_sub(const QuadQ& x, const QuadQ& y);
QuadQ qq_mul(const QuadQ& x, const QuadQ& y);
QuadQ qq_neg(const QuadQ& x);
QuadQ qq_inv(const QuadQ& x);  // throws ZeroDivisor on 0

/// Exact sign of a + b*sqrt(2), decided by sign analysis of a^2 - 2 b^2.
int qq_sign(const QuadQ& x);

/// Exact comparison x <wrt> y as real numbers.
inline int qq_cmp(const QuadQ& x, const QuadQ& y) { return qq_sign(qq_sub(x, y)); }

/// |x| as an element of Q(sqrt(2)) (sign-resolved negation).
QuadQ qq_abs(const QuadQ& x);

/// Exact floor of the real value a + b*sqrt(2).
Int qq_floor(const QuadQ& x);

/// Nearest integer, ties away from zero (odd-symmetric).
Int qq_round(const QuadQ& x);

/// Certified enclosure of the real value (not of its absolute value).
RealBound qq_enclosure(const QuadQ& x, unsigned prec_bits);

/// Certified enclosure of |a + b*sqrt(2)|.
RealBound qq_abs_bound(const QuadQ& x, unsigned prec_bits);

}  // namespace crat
