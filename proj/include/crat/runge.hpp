#pragma once

#include "crat/ideal.hpp"

namespace crat {

constexpr unsigned long kDefaultDegreeBudget = 64;

/// Taylor-truncation approximation of f inside <(z - z_out)^m> on the closed
/// disk |z| <= R, valid when the pole z_out lies strictly outside the disk.
/// Returns h with a certified bound on V_R(h * (z - z_out)^m - f); the bound
/// comes from the closed-form geometric tail, never from trial evaluation.
struct RungeResult {
    PolyC h;
    Rat bound;
    unsigned long degree;
};
RungeResult runge_disk_densify(const PolyC& f, const CRat& z_out, unsigned long m, const Rat& R,
                               const Rat& eps, unsigned long degree_budget = kDefaultDegreeBudget);

/// Closed-form tail bound at a fixed truncation degree (what runge_disk_densify
/// minimizes over). Exposed for bound-monotonicity reporting.
Rat runge_tail_bound(const PolyC& f, const CRat& z_out, unsigned long m, const Rat& R,
                     unsigned long degree);

/// Approximant of f inside the ideal generated by a product of linear factors,
/// all roots strictly outside the disk: V_R(f - multiplier * gen) <= bound < eps.
struct IdealApprox {
    PolyC multiplier;
    Rat bound;
};
IdealApprox poly_ideal_approx(const PolyC& f, const std::vector<LinearFactor>& factors, const Rat& R,
                              const Rat& eps, unsigned long degree_budget = kDefaultDegreeBudget);

/// Density certificate for a factored poly ideal whose roots all lie strictly
/// outside the disk: an element a of the ideal with V_R(1 - a) <= bound < eps.
struct PolyDensityCert {
    Element a;
    Rat bound;
};
PolyDensityCert ideal_density_certificate(const PrincipalIdeal& I, const Rat& eps,
                                          unsigned long degree_budget = kDefaultDegreeBudget);

}  // namespace crat
