#pragma once

#include "crat/witness.hpp"

namespace crat {

struct ResidueEntry {
    PrincipalIdeal ideal;
    Element target;
};

/// Simultaneous congruence problem: approximate r with r = target_k mod I_k
/// up to epsilon under the given valuation. epsilon == 0 demands the exact
/// classical solution (all witnesses exact).
struct ResidueSystem {
    RingContext ring;
    PseudoValuation valuation;
    std::vector<ResidueEntry> entries;
    Rat epsilon;
};

struct Residual {
    PrincipalIdeal ideal;
    Rat bound;        // certified upper on V(solution - target - witness)
    Element witness;  // element of the ideal realizing the decomposition
};

/// Machine-checkable output of the solvers: the residuals can be re-verified
/// from scratch by dividing each witness by its ideal generator and
/// re-evaluating the valuation.
struct Certificate {
    Element solution;
    Rat epsilon;
    std::vector<Residual> residuals;
    std::string valuation_id;
};

Certificate finite_crat(const ResidueSystem& sys, unsigned long degree_budget = kDefaultDegreeBudget);

/// Recheck a certificate against its system: membership of every witness,
/// every bound against a fresh valuation, and bounds against epsilon.
/// Throws ToleranceViolation / Internal style errors on failure.
void check_certificate(const ResidueSystem& sys, const Certificate& cert);

/// Iterative densification r_{n+1} = r_n + (r - r_n) a toward r inside I,
/// contracting at the certified rate delta = V(1 - a) < 1.
struct DensifyResult {
    Element result;  // r' in I with V(r - r') < eps
    unsigned long n0;            // a-priori iteration count from delta^n V(r) < eps
    Rat achieved;                // certified upper on V(r - r')
    Rat delta;                   // certified upper on V(1 - a)
    std::vector<Element> iterates;      // r_0, r_1, ...
    std::vector<Rat> iterate_bounds;    // certified upper on V(r - r_n), <= delta^n V(r)
};
DensifyResult densify(const PrincipalIdeal& I, const Element& a, const Element& r, const Rat& eps);

/// y = a x' + b x in I meet J with V(x - y) < eps, given x in I, x' in J close
/// to x, and a TCM witness (a in I, b in J). Tolerance bookkeeping per the
/// contraction estimate; violations are rejected, not absorbed.
struct MeetApprox {
    Element y;
    Rat bound;
};
MeetApprox comaximal_meet_approx(const Element& x, const TCMWitness& w, const Element& x_prime,
                                 const Rat& eps);

/// delta such that both delta and V(a) delta fit inside eps/3.
Rat choose_delta(const Rat& eps, const TCMWitness& w);

/// r' = b r1 + a r2 in I meet J with V(r - r') < eps, from an exact witness
/// a + b = 1 and coset representatives r1 in I, r2 in J within delta of r.
struct StabilityLift {
    Element y;
    Rat bound;
};
StabilityLift stability_lift(const TCMWitness& w, const Element& r, const Element& r1,
                             const Element& r2, const Rat& eps);

/// y = a x: the openness construction. y in I, y - x in J, and
/// V(y) <= V(a) V(x) recorded as the openness bound. Requires an exact witness.
struct QuotientLift {
    Element y;
    Rat norm_bound;
};
QuotientLift quotient_lift(const Element& x, const TCMWitness& w);

/// Finite-exception reduction: split a pairwise TCM family into the finite
/// exceptional part and density certificates for everyone else.
struct ReduceResult {
    std::vector<PrincipalIdeal> exceptional;
    std::vector<std::pair<PrincipalIdeal, DensityCert>> certified;
};
ReduceResult reduce_family(const std::vector<PrincipalIdeal>& family, const Rat& eps,
                           const PseudoValuation& V, unsigned long degree_budget = kDefaultDegreeBudget);

/// Finite-exception CRAT: reduce the family at epsilon, solve the exceptional
/// subsystem with finite_crat, and certify every remaining entry through its
/// density certificate.
Certificate crat_infinite(const ResidueSystem& sys, unsigned long degree_budget = kDefaultDegreeBudget);

}  // namespace crat
