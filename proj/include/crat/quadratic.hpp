#pragma once

#include "crat/sqrt2.hpp"

namespace crat {

/// Result of an approximation in Z[sqrt2]: the element plus a certified
/// rational upper bound on the achieved error (strictly below the request).
struct QuadApprox {
    Quad value;
    Rat bound;
    bool exact() const { return bound == 0; }
};

/// Element of Z[sqrt2] within eps of the rational target.
QuadApprox quad_approx(const Rat& target, const Rat& eps);

/// s in Z[sqrt2] with |s*d - 1| < eps. Exact (bound 0) when d is a unit.
QuadApprox quad_inverse_approx(const Quad& d, const Rat& eps);

/// Bounded lattice scan: first s with |a|,|b| <= coeff_bound and certified
/// |s*d - 1| < eps, minimizing the error. Fallback search path; nullopt when
/// no such element exists in the box.
std::optional<QuadApprox> quad_inverse_scan(const Quad& d, const Rat& eps, long coeff_bound);

/// Refined upper bound on |x| strictly below `below` (which must exceed |x|).
Rat qq_upper_below(const QuadQ& x, const Rat& below);

}  // namespace crat
