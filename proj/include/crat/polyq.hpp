#pragma once

#include <utility>
#include <vector>

#include "crat/complexq.hpp"

namespace crat {

/// Dense univariate polynomial over the complex rationals, coefficients in
/// ascending degree. Canonical form carries no trailing zero coefficients;
/// the zero polynomial is the empty vector.
using PolyC = std::vector<CRat>;

PolyC poly_trim(PolyC p);
inline bool poly_is_zero(const PolyC& p) { return p.empty(); }
long poly_degree(const PolyC& p);  // -1 for the zero polynomial
PolyC poly_one();
PolyC poly_const(const CRat& c);

PolyC poly_add(const PolyC& f, const PolyC& g);
PolyC poly_sub(const PolyC& f, const PolyC& g);
PolyC poly_mul(const PolyC& f, const PolyC& g);
PolyC poly_neg(const PolyC& f);
PolyC poly_scale(const PolyC& f, const CRat& c);
PolyC poly_pow(const PolyC& f, unsigned long e);

/// Exact Euclidean division over the coefficient field: f = q*g + r with
/// deg r < deg g. Throws ZeroDivisor when g = 0.
std::pair<PolyC, PolyC> poly_divmod(const PolyC& f, const PolyC& g);

/// Quotient when g divides f exactly, nullopt otherwise.
std::optional<PolyC> poly_div_exact(const PolyC& f, const PolyC& g);

CRat poly_eval(const PolyC& f, const CRat& z);
PolyC poly_derivative(const PolyC& f);

/// Monic greatest common divisor.
PolyC poly_gcd(PolyC f, PolyC g);

/// Extended Euclid: returns (g, u, v) with u*f + v*h = g, g monic (or zero).
struct PolyExtGcd {
    PolyC g, u, v;
};
PolyExtGcd poly_ext_gcd(const PolyC& f, const PolyC& h);

/// (z - root)^mult expanded.
PolyC poly_linear_power(const CRat& root, unsigned long mult);

/// k-th Taylor coefficient of f about z0: f^(k)(z0) / k!.
CRat poly_taylor_coeff(const PolyC& f, const CRat& z0, unsigned long k);

}  // namespace crat
