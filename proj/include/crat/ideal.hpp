#pragma once

#include <vector>

#include "crat/element.hpp"

namespace crat {

struct LinearFactor {
    CRat root;
    unsigned long mult = 1;
    bool operator==(const LinearFactor&) const = default;
};

/// Ideal given by a single generator. Poly-kind ideals additionally carry a
/// factored form (products of linear factors are the only supported shape);
/// the zero ideal is generator 0 with no factored form.
struct PrincipalIdeal {
    RingContext ring;
    Element generator;
    std::optional<std::vector<LinearFactor>> factors;

    bool operator==(const PrincipalIdeal&) const = default;

    bool is_whole_ring() const;
    bool is_zero_ideal() const { return generator.is_zero(); }
    bool contains(const Element& x) const;

    static PrincipalIdeal integers(const RingContext& ctx, Int gen);
    static PrincipalIdeal quadratic(const RingContext& ctx, Quad gen);
    static PrincipalIdeal poly_from_factors(const RingContext& ctx, std::vector<LinearFactor> fs);
    static PrincipalIdeal poly_zero(const RingContext& ctx);
    static PrincipalIdeal whole_ring(const RingContext& ctx);
};

/// Join in the ideal lattice: closure of I + J. Integers: gcd of generators;
/// polynomials: common roots with minimal multiplicities.
PrincipalIdeal ideal_add(const PrincipalIdeal& I, const PrincipalIdeal& J);

/// Meet: I intersect J. Integers: lcm; polynomials: all roots, maximal mult.
PrincipalIdeal ideal_meet(const PrincipalIdeal& I, const PrincipalIdeal& J);

/// Example 3.2 characterization: in the p-adic topology on Z, two ideals are
/// topologically co-maximal iff at least one generator is prime to p.
bool padic_tcm(const PrincipalIdeal& I, const PrincipalIdeal& J);

/// Multiplicity of `root` in the factored form (0 when absent).
unsigned long factor_multiplicity(const std::vector<LinearFactor>& fs, const CRat& root);

}  // namespace crat
