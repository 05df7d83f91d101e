#include "crat/interp.hpp"

#include "crat/error.hpp"

namespace crat {

PolyQuad qpoly_trim(PolyQuad p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

PolyQuad qpoly_add(const PolyQuad& f, const PolyQuad& g) {
    PolyQuad r(std::max(f.size(), g.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        Quad a = i < f.size() ? f[i] : Quad{};
        Quad b = i < g.size() ? g[i] : Quad{};
        r[i] = quad_add(a, b);
    }
    return qpoly_trim(std::move(r));
}

PolyQuad qpoly_mul(const PolyQuad& f, const PolyQuad& g) {
    if (f.empty() || g.empty()) return {};
    PolyQuad r(f.size() + g.size() - 1);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = quad_add(r[i + j], quad_mul(f[i], g[j]));
    return qpoly_trim(std::move(r));
}

PolyQuad qpoly_scale(const PolyQuad& f, const Quad& c) {
    if (c.is_zero()) return {};
    PolyQuad r = f;
    for (auto& x : r) x = quad_mul(x, c);
    return r;
}

Quad qpoly_eval(const PolyQuad& f, const Quad& x) {
    Quad acc{};
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = quad_add(quad_mul(acc, x), *it);
    return acc;
}

LagrangeResult lagrange_dense(const LagrangeProblem& prob, const InverseOracle& inverse) {
    const size_t n = prob.points.size();
    if (n == 0) fail(Err::Schema, "no interpolation points");
    if (prob.values.size() != n) fail(Err::Schema, "points/values length mismatch");
    if (prob.epsilon <= 0) fail(Err::Schema, "epsilon must be positive");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (prob.points[i] == prob.points[j]) fail(Err::DuplicatePoints, "repeated node");

    const InverseOracle inv = inverse ? inverse : InverseOracle(quad_inverse_approx);

    PolyQuad p;
    std::vector<Quad> node_polys_at_i(n);
    for (size_t i = 0; i < n; ++i) {
        PolyQuad li = {Quad{Int(1), Int(0)}};
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            li = qpoly_mul(li, {quad_neg(prob.points[j]), Quad{Int(1), Int(0)}});
        }
        Quad di = qpoly_eval(li, prob.points[i]);

        Rat scale = rat_max(Rat(1), qq_abs_bound(QuadQ(prob.values[i]), 64).hi);
        Rat eps_i = prob.epsilon / (Rat(static_cast<long>(n)) * scale);
        QuadApprox si = inv(di, eps_i);

        Quad ci = quad_mul(prob.values[i], si.value);
        p = qpoly_add(p, qpoly_scale(li, ci));
        node_polys_at_i[i] = di;
    }

    LagrangeResult out;
    out.polynomial = p;
    for (size_t i = 0; i < n; ++i) {
        Quad res = quad_sub(qpoly_eval(p, prob.points[i]), prob.values[i]);
        Rat bound = res.is_zero() ? Rat(0) : qq_upper_below(QuadQ(res), prob.epsilon);
        out.residuals.push_back({i, std::move(bound)});
    }
    return out;
}

PolyC hermite_jets(const JetProblem& prob) {
    const size_t n = prob.points.size();
    if (n == 0) fail(Err::Schema, "no interpolation points");
    if (prob.orders.size() != n || prob.jets.size() != n)
        fail(Err::Schema, "points/orders/jets length mismatch");
    for (size_t i = 0; i < n; ++i)
        if (prob.jets[i].size() != prob.orders[i] + 1)
            fail(Err::Schema, "jet list must have length m_n + 1");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (prob.points[i] == prob.points[j]) fail(Err::DuplicatePoints, "repeated node");

    const RingContext ctx = RingContext::poly(Rat(1));
    ResidueSystem sys{ctx, disk_seminorm(ctx), {}, Rat(0)};
    PolyC modulus = poly_one();
    for (size_t i = 0; i < n; ++i) {
        PrincipalIdeal I =
            PrincipalIdeal::poly_from_factors(ctx, {{prob.points[i], prob.orders[i] + 1}});
        // Target: the Taylor jet sum_k w_{k,n} (z - z_n)^k.
        PolyC t;
        for (unsigned long k = 0; k <= prob.orders[i]; ++k)
            t = poly_add(t, poly_scale(poly_linear_power(prob.points[i], k), prob.jets[i][k]));
        sys.entries.push_back({std::move(I), make_poly_element(ctx, std::move(t))});
        modulus = poly_mul(modulus, poly_linear_power(prob.points[i], prob.orders[i] + 1));
    }

    Certificate cert = finite_crat(sys);
    auto [q, f] = poly_divmod(cert.solution.as_poly(), modulus);
    (void)q;

    for (size_t i = 0; i < n; ++i) {
        PolyC d = f;
        Rat k_fact(1);
        for (unsigned long k = 0; k <= prob.orders[i]; ++k) {
            if (k > 0) {
                d = poly_derivative(d);
                k_fact *= Rat(static_cast<long>(k));
            }
            CRat want = cq_mul(CRat(k_fact), prob.jets[i][k]);
            if (!(poly_eval(d, prob.points[i]) == want))
                fail(Err::Internal, "interpolant failed a prescribed jet");
        }
    }
    return f;
}

}  // namespace crat
