#pragma once

#include <functional>

#include "crat/quadratic.hpp"
#include "crat/solver.hpp"

namespace crat {

// Polynomials over Z[sqrt2], ascending coefficients, no trailing zeros.
using PolyQuad = std::vector<Quad>;

PolyQuad qpoly_trim(PolyQuad p);
PolyQuad qpoly_add(const PolyQuad& f, const PolyQuad& g);
PolyQuad qpoly_mul(const PolyQuad& f, const PolyQuad& g);
PolyQuad qpoly_scale(const PolyQuad& f, const Quad& c);
Quad qpoly_eval(const PolyQuad& f, const Quad& x);

struct LagrangeProblem {
    std::vector<Quad> points;  // pairwise distinct
    std::vector<Quad> values;
    Rat epsilon;  // > 0
};

struct LagrangeResidual {
    size_t index;
    Rat bound;  // certified upper on |p(x_i) - y_i|, < epsilon
};

struct LagrangeResult {
    PolyQuad polynomial;
    std::vector<LagrangeResidual> residuals;
};

/// Approximate-inverse oracle for the coefficient ring. The default is the
/// Z[sqrt2] greedy expansion; a caller instantiating another topologically
/// simple subring supplies its own.
using InverseOracle = std::function<QuadApprox(const Quad& d, const Rat& eps)>;

/// Lagrange interpolation over the dense subring: p = sum y_i s_i l_i with
/// l_i the unnormalized node polynomials and s_i certified approximate
/// inverses of l_i(x_i). Residual at x_i is exactly y_i (s_i l_i(x_i) - 1),
/// certified below epsilon.
LagrangeResult lagrange_dense(const LagrangeProblem& prob, const InverseOracle& inverse = {});

struct JetProblem {
    std::vector<CRat> points;              // pairwise distinct
    std::vector<unsigned long> orders;     // m_n
    std::vector<std::vector<CRat>> jets;   // w_{k,n} for 0 <= k <= m_n
};

/// Exact Hermite interpolation: the unique f of degree < sum(m_n + 1) with
/// f^(k)(z_n) = k! w_{k,n}, computed by the exact-witness congruence solver
/// over the ideals <(z - z_n)^(m_n + 1)> and reduced modulo their product.
/// Every prescribed jet is re-verified by symbolic differentiation.
PolyC hermite_jets(const JetProblem& prob);

}  // namespace crat
