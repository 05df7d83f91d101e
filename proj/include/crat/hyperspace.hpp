#pragma once

#include "crat/runge.hpp"
#include "crat/valuation.hpp"

namespace crat {

enum class Verdict { Yes, No, Undecided };

/// Outcome of a one-sided coverage query B <= A + B_V(eps), with enough data
/// to re-check it: a Yes over the poly kind carries an approximant of gen(B)
/// inside A; a No carries a separating element of B together with a certified
/// lower bound on its distance from A.
struct CoverageResult {
    Verdict verdict = Verdict::Undecided;
    Rat bound;  // Yes: achieved approximation bound; No: distance lower bound
    std::optional<Element> approximant;
    std::optional<Element> separator;
    std::string detail;
};

/// Does A, thickened by the eps-ball, cover B? (B subseteq A + B_V(eps))
/// p-adic kind: exact decision via gcd(gen A, p^m) | gen B with m the ball
/// exponent. Poly kind: semi-decision under a degree budget; Undecided is a
/// first-class outcome.
CoverageResult covers(const PrincipalIdeal& A, const PrincipalIdeal& B, const PseudoValuation& V,
                      const Rat& eps, unsigned long degree_budget = kDefaultDegreeBudget);

/// Both directions of covers: membership of (A, B) in the entourage H(eps).
CoverageResult entourage(const PrincipalIdeal& A, const PrincipalIdeal& B, const PseudoValuation& V,
                         const Rat& eps, unsigned long degree_budget = kDefaultDegreeBudget);

/// Infimum scale on the discrete spectrum {p^-m}: the returned value g is such
/// that the entourage holds at every eps > g and fails at every eps <= g
/// (g = 0 means the ideals are at distance zero, i.e. equal closures).
Rat padic_gap(const PrincipalIdeal& A, const PrincipalIdeal& B);

struct JoinContinuityCase {
    PrincipalIdeal a1, b1, a2, b2;
};
struct JoinContinuityReport {
    size_t checked = 0;  // hypothesis held, conclusion verified
    size_t skipped = 0;  // hypothesis failed (vacuous)
    std::vector<size_t> violations;
};

/// delta = eps/3 continuity of the join: entourage(A1,A2,eps/3) and
/// entourage(B1,B2,eps/3) must force entourage(A1 v B1, A2 v B2, eps).
JoinContinuityReport join_continuity_test(const std::vector<JoinContinuityCase>& cases,
                                          const PseudoValuation& V, const Rat& eps);

struct NetSpec {
    std::vector<PrincipalIdeal> chain;        // descending: gen_n | gen_{n+1}
    std::optional<PrincipalIdeal> limit;      // candidate; defaults described below
};

enum class NetKind { ConvergesToIntersection, Stalls, CauchyNotConvergent };

struct NetEvidence {
    size_t index;   // pair (S_index, S_index+1)
    Int k;          // gen_index ~ k * gen_{index+1} modulo a deep ball
    Rat valuation;  // V(gen_index - k * gen_{index+1})
};

struct NetResult {
    NetKind kind;
    PrincipalIdeal limit;
    std::vector<Rat> gaps;         // padic_gap(S_n, limit)
    std::vector<Rat> consecutive;  // padic_gap(S_n, S_{n+1})
    Rat floor_bound;               // min gap; relevant for the non-convergent kinds
    std::vector<NetEvidence> evidence;
};

/// Classifies a finite descending chain against its limit candidate: gaps
/// decaying to the candidate, a positive floor with shrinking consecutive
/// gaps (Cauchy but not convergent), or a plain stall. When no candidate is
/// given, uses the last chain member if the generators stabilize and the zero
/// ideal otherwise.
NetResult monotone_limit_check(const NetSpec& net);

struct DivergenceRow {
    unsigned long n;
    Rat lower_bound;  // certified: gap(I^n, I^(n+1)) >= rho^n
};
struct DivergenceDemo {
    CRat z0;
    Rat rho;  // certified lower bound on the inner radius R - |z0|
    std::vector<DivergenceRow> rows;
};

/// The non-convergence table for I = <z - z0> on the disk of radius R: the
/// n-th Taylor coefficient functional at z0 separates I^n from I^(n+1) by at
/// least rho^n.
DivergenceDemo ideal_power_divergence_demo(const CRat& z0, const RingContext& poly_ctx,
                                           unsigned long n_max);

}  // namespace crat
