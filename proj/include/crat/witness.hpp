#pragma once

#include "crat/runge.hpp"
#include "crat/valuation.hpp"

namespace crat {

/// Constructive certificate that two ideals are topologically co-maximal:
/// i in I and j in J with a certified bound on V(1 - (i + j)). bound == 0
/// means i + j = 1 exactly (classical co-maximality).
struct TCMWitness {
    PrincipalIdeal I;
    PrincipalIdeal J;
    Element i;
    Element j;
    Rat bound;
    PseudoValuation valuation;

    bool exact() const { return bound == 0; }
};

/// Witness search for the pair (I, J) at tolerance eps. eps == 0 demands an
/// exact witness (extended Euclid); otherwise the witness is exact whenever
/// the generators are classically co-maximal and approximate otherwise
/// (modular inverse in the p-adic kind, Taylor densification in the poly kind).
/// Throws NotTCM when the ideals are provably not topologically co-maximal.
TCMWitness tcm_witness(const PrincipalIdeal& I, const PrincipalIdeal& J, const PseudoValuation& V,
                       const Rat& eps, unsigned long degree_budget = kDefaultDegreeBudget);

/// Witness for (I, J1 * J2) out of witnesses for (I, J1) and (I, J2), via
/// (i1 + j1)(i2 + j2). Recorded bound is the tighter of the derived formula
/// b1 + (1 + b1) b2 and a recomputed certified value.
TCMWitness combine_witnesses_product(const TCMWitness& w1, const TCMWitness& w2);

/// Witness for (I, meet of others) by folding pairwise witnesses with a
/// geometric tolerance split so the final bound stays below eps.
TCMWitness intersection_witness(const PrincipalIdeal& I, const std::vector<PrincipalIdeal>& others,
                                const PseudoValuation& V, const Rat& eps,
                                unsigned long degree_budget = kDefaultDegreeBudget);

/// Element a in I with V(1 - a) <= bound < eps, when I is (V, eps)-dense and
/// a certificate is constructible; nullopt when I is provably or practically
/// not eps-dense (p | generator, root inside the disk, zero generator).
struct DensityCert {
    Element a;
    Rat bound;
};
std::optional<DensityCert> try_density_certificate(const PrincipalIdeal& I, const PseudoValuation& V,
                                                   const Rat& eps,
                                                   unsigned long degree_budget = kDefaultDegreeBudget);

/// Decision form of topological co-maximality on the supported kinds:
/// p-adic via the density characterization, poly via shared inside roots,
/// quad via nonzero-ness.
bool tcm_decide(const PrincipalIdeal& I, const PrincipalIdeal& J);

}  // namespace crat
