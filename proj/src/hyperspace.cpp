#include "crat/hyperspace.hpp"

#include "crat/error.hpp"

namespace crat {

namespace {

/// Positive rational lower bound on |c| for nonzero c.
Rat abs_lower_positive(const CRat& c) {
    for (unsigned prec = 32;; prec *= 2) {
        RealBound b = cq_abs_bound(c, prec);
        if (b.lo > 0) return b.lo;
        if (prec > (1u << 14)) fail(Err::Internal, "modulus lower bound did not separate from 0");
    }
}

/// Certified rational 0 < rho <= R - |w| for |w| < R strictly.
Rat inner_radius(const CRat& w, const Rat& R) {
    if (w.is_zero()) return R;
    for (unsigned prec = 32;; prec *= 2) {
        RealBound b = cq_abs_bound(w, prec);
        if (b.hi < R) return R - b.hi;
        if (prec > (1u << 14)) fail(Err::Internal, "inner radius did not separate");
    }
}

CoverageResult padic_covers(const PrincipalIdeal& A, const PrincipalIdeal& B, const Rat& eps) {
    const Int& p = A.ring.prime();
    const unsigned long m = padic_ball_exponent(p, eps);
    const Int pm = pow_int(p, m);
    Int g;
    mpz_gcd(g.get_mpz_t(), A.generator.as_int().get_mpz_t(), pm.get_mpz_t());
    const Int& b = B.generator.as_int();
    if (mpz_divisible_p(b.get_mpz_t(), g.get_mpz_t())) {
        CoverageResult r;
        r.verdict = Verdict::Yes;
        r.bound = m == 0 ? Rat(1) : make_rat(Int(1), pm);
        r.detail = "gcd(genA, p^" + std::to_string(m) + ") = " + g.get_str() + " divides " + b.get_str();
        return r;
    }
    // g = p^s with s = min(v_p(a), m) and p^s does not divide gen(B):
    // every element of A + B(eps) = p^s Z sits at distance >= p^-t from gen(B).
    CoverageResult r;
    r.verdict = Verdict::No;
    r.separator = B.generator;
    r.bound = b == 0 ? Rat(0) : padic_value(b, p);
    r.detail = "gcd(genA, p^" + std::to_string(m) + ") = " + g.get_str() + " does not divide " + b.get_str();
    return r;
}

CoverageResult poly_covers(const PrincipalIdeal& A, const PrincipalIdeal& B,
                           const PseudoValuation& V, const Rat& eps, unsigned long degree_budget) {
    const RingContext& ctx = A.ring;
    const Rat R = ctx.radius();
    const Rat r2 = R * R;
    CoverageResult out;

    if (B.is_zero_ideal()) {
        out.verdict = Verdict::Yes;
        out.bound = Rat(0);
        out.detail = "the zero ideal is covered by anything";
        return out;
    }
    if (A.is_zero_ideal()) {
        // Scale gen(B) until it clears eps away from 0.
        Rat lo = V.lower(B.generator, 64);
        for (unsigned prec = 128; lo <= 0; prec *= 2) {
            lo = V.lower(B.generator, prec);
            if (prec > (1u << 14)) fail(Err::Internal, "norm lower bound did not separate");
        }
        Int N(1);
        while (!(Rat(N * lo) >= eps)) N *= 2;
        out.verdict = Verdict::No;
        out.separator = make_poly_element(ctx, poly_scale(B.generator.as_poly(), CRat(Rat(N))));
        out.bound = Rat(N * lo);
        out.detail = "nonzero ideal cannot be covered by the zero ideal";
        return out;
    }
    if (!A.factors || !B.factors) fail(Err::Schema, "poly coverage needs factored ideals");

    // Negative route: an inside root of gen(A) where gen(B) has lower order.
    for (const auto& f : *A.factors) {
        const Rat n2 = cq_norm2(f.root);
        if (n2 > r2) continue;  // pole outside: imposes no constraint
        const unsigned long k = factor_multiplicity(*B.factors, f.root);
        if (k >= f.mult) continue;
        if (n2 == r2 && k >= 1) {
            out.verdict = Verdict::Undecided;
            out.detail = "boundary root with a positive-order deficiency";
            return out;
        }
        // |c_k(x; w)| <= V_R(x) / rho^k for the disk of radius rho about w;
        // members of A have order >= mult > k at w, so the functional kills them.
        const Rat rho = k == 0 ? Rat(1) : inner_radius(f.root, R);
        const CRat c = poly_taylor_coeff(B.generator.as_poly(), f.root, k);
        if (c.is_zero()) fail(Err::Internal, "factored form disagrees with Taylor order");
        const Rat per_unit = abs_lower_positive(c) * pow_rat(rho, k);
        Int N(1);
        while (!(Rat(N * per_unit) >= eps)) N *= 2;
        out.verdict = Verdict::No;
        out.separator = make_poly_element(ctx, poly_scale(B.generator.as_poly(), CRat(Rat(N))));
        out.bound = Rat(N * per_unit);
        out.detail = "order-" + std::to_string(k) + " Taylor functional at an inside root separates";
        return out;
    }

    // Positive route: every inside root of A divides into B, so gen(B) splits
    // as in_A * rest and only the outside part needs densification.
    std::vector<LinearFactor> inside, outside;
    for (const auto& f : *A.factors)
        (cq_norm2(f.root) <= r2 ? inside : outside).push_back(f);
    PolyC in_prod = poly_one();
    for (const auto& f : inside) in_prod = poly_mul(in_prod, poly_linear_power(f.root, f.mult));
    auto rest = poly_div_exact(B.generator.as_poly(), in_prod);
    if (!rest) fail(Err::Internal, "inside factors no longer divide gen(B)");

    const Rat in_norm = poly_seminorm(in_prod, R);
    try {
        IdealApprox ap = poly_ideal_approx(*rest, outside, R, Rat(eps / rat_max(Rat(1), in_norm)),
                                           degree_budget);
        PolyC approx = poly_mul(ap.multiplier, A.generator.as_poly());
        out.verdict = Verdict::Yes;
        out.bound = Rat(ap.bound * in_norm);
        out.approximant = make_poly_element(ctx, std::move(approx));
        out.detail = "generator approximant constructed inside A";
        return out;
    } catch (const CratError& e) {
        if (e.code != Err::DegreeBudget) throw;
        out.verdict = Verdict::Undecided;
        out.detail = "degree budget exhausted before certification";
        return out;
    }
}

}  // namespace

CoverageResult covers(const PrincipalIdeal& A, const PrincipalIdeal& B, const PseudoValuation& V,
                      const Rat& eps, unsigned long degree_budget) {
    if (!(A.ring == B.ring)) fail(Err::MixedRings, "coverage across rings");
    if (!(A.ring == V.ring())) fail(Err::MixedRings, "valuation ring mismatch");
    if (eps <= 0) fail(Err::Schema, "eps must be positive");
    switch (A.ring.kind) {
        case RingKind::PadicInt: return padic_covers(A, B, eps);
        case RingKind::Poly: return poly_covers(A, B, V, eps, degree_budget);
        case RingKind::QuadInt: fail(Err::UnsupportedRing, "coverage over Z[sqrt2]");
    }
    fail(Err::Internal, "unreachable");
}

CoverageResult entourage(const PrincipalIdeal& A, const PrincipalIdeal& B, const PseudoValuation& V,
                         const Rat& eps, unsigned long degree_budget) {
    CoverageResult ab = covers(A, B, V, eps, degree_budget);  // B <= A + eps
    CoverageResult ba = covers(B, A, V, eps, degree_budget);  // A <= B + eps
    if (ab.verdict == Verdict::No) return ab;
    if (ba.verdict == Verdict::No) return ba;
    if (ab.verdict == Verdict::Undecided) return ab;
    if (ba.verdict == Verdict::Undecided) return ba;
    CoverageResult r;
    r.verdict = Verdict::Yes;
    r.bound = rat_max(ab.bound, ba.bound);
    r.detail = "both directions covered";
    return r;
}

Rat padic_gap(const PrincipalIdeal& A, const PrincipalIdeal& B) {
    if (!(A.ring == B.ring)) fail(Err::MixedRings, "gap across rings");
    if (A.ring.kind != RingKind::PadicInt) fail(Err::WrongRing, "padic_gap on " + A.ring.label());
    const Int& p = A.ring.prime();
    const Int a = A.generator.as_int();
    const Int b = B.generator.as_int();
    if (a == b) return Rat(0);

    auto holds_at = [&](unsigned long m) {
        const Int pm = pow_int(p, m);
        Int ga, gb;
        mpz_gcd(ga.get_mpz_t(), a.get_mpz_t(), pm.get_mpz_t());
        mpz_gcd(gb.get_mpz_t(), b.get_mpz_t(), pm.get_mpz_t());
        return mpz_divisible_p(b.get_mpz_t(), ga.get_mpz_t()) != 0 &&
               mpz_divisible_p(a.get_mpz_t(), gb.get_mpz_t()) != 0;
    };

    // Beyond max(v_p(a), v_p(b)) the gcds stabilize, so the sweep is finite.
    unsigned long cap = 2;
    if (a != 0) cap = std::max(cap, padic_exponent(a, p) + 2);
    if (b != 0) cap = std::max(cap, padic_exponent(b, p) + 2);

    unsigned long best = 0;  // holds_at(0) is always true
    for (unsigned long m = 1; m <= cap; ++m) {
        if (!holds_at(m)) return make_rat(Int(1), pow_int(p, best));
        best = m;
    }
    if (a != 0 && b != 0) return Rat(0);  // stabilized and still holding
    return make_rat(Int(1), pow_int(p, best));
}

JoinContinuityReport join_continuity_test(const std::vector<JoinContinuityCase>& cases,
                                          const PseudoValuation& V, const Rat& eps) {
    if (eps <= 0) fail(Err::Schema, "eps must be positive");
    JoinContinuityReport rep;
    const Rat third = eps / 3;
    for (size_t idx = 0; idx < cases.size(); ++idx) {
        const auto& c = cases[idx];
        bool hyp = entourage(c.a1, c.a2, V, third).verdict == Verdict::Yes &&
                   entourage(c.b1, c.b2, V, third).verdict == Verdict::Yes;
        if (!hyp) {
            ++rep.skipped;
            continue;
        }
        PrincipalIdeal j1 = ideal_add(c.a1, c.b1);
        PrincipalIdeal j2 = ideal_add(c.a2, c.b2);
        if (entourage(j1, j2, V, eps).verdict == Verdict::Yes)
            ++rep.checked;
        else
            rep.violations.push_back(idx);
    }
    return rep;
}

NetResult monotone_limit_check(const NetSpec& net) {
    if (net.chain.empty()) fail(Err::Schema, "empty chain");
    const RingContext& ctx = net.chain.front().ring;
    if (ctx.kind != RingKind::PadicInt) fail(Err::WrongRing, "net check on " + ctx.label());
    for (size_t n = 0; n + 1 < net.chain.size(); ++n) {
        if (!(net.chain[n + 1].ring == ctx)) fail(Err::MixedRings, "chain crosses rings");
        if (!net.chain[n].contains(net.chain[n + 1].generator))
            fail(Err::NotDescending, "S_" + std::to_string(n) + " does not contain S_" +
                                         std::to_string(n + 1));
    }

    PrincipalIdeal limit = [&] {
        if (net.limit) return *net.limit;
        const size_t N = net.chain.size();
        if (N >= 2 && net.chain[N - 1] == net.chain[N - 2]) return net.chain.back();
        return PrincipalIdeal::integers(ctx, Int(0));
    }();

    NetResult out{NetKind::ConvergesToIntersection, limit, {}, {}, Rat(0), {}};
    for (const auto& S : net.chain) out.gaps.push_back(padic_gap(S, limit));
    for (size_t n = 0; n + 1 < net.chain.size(); ++n)
        out.consecutive.push_back(padic_gap(net.chain[n], net.chain[n + 1]));

    Rat floor = out.gaps.front();
    for (const auto& g : out.gaps) floor = rat_min(floor, g);
    out.floor_bound = floor;

    auto strictly_decreasing = [](const std::vector<Rat>& v) {
        for (size_t i = 0; i + 1 < v.size(); ++i)
            if (!(v[i + 1] < v[i])) return false;
        return true;
    };
    auto all_zero = [](const std::vector<Rat>& v) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    };

    if (all_zero(out.gaps) || out.gaps.back() == 0 || strictly_decreasing(out.gaps)) {
        out.kind = NetKind::ConvergesToIntersection;
        return out;
    }
    const bool cauchy = all_zero(out.consecutive) || strictly_decreasing(out.consecutive);
    out.kind = cauchy ? NetKind::CauchyNotConvergent : NetKind::Stalls;

    if (cauchy) {
        // Exhibit the closeness of consecutive members concretely: a k with
        // gen_n - k gen_{n+1} deep inside a p-ball.
        const Int& p = ctx.prime();
        const Int modulus = pow_int(p, 8);
        for (size_t n = 0; n + 1 < net.chain.size(); ++n) {
            const Int& gn = net.chain[n].generator.as_int();
            const Int& gn1 = net.chain[n + 1].generator.as_int();
            if (gn == 0 || gn1 == 0) continue;
            unsigned long t = padic_exponent(gn1, p);
            if (padic_exponent(gn, p) != t) continue;
            Int unit = gn1 / pow_int(p, t);
            Int inv;
            if (mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t()) == 0) continue;
            Int k = ((gn / pow_int(p, t)) * inv) % modulus;
            out.evidence.push_back({n, k, padic_value(Int(gn - k * gn1), p)});
        }
    }
    return out;
}

DivergenceDemo ideal_power_divergence_demo(const CRat& z0, const RingContext& poly_ctx,
                                           unsigned long n_max) {
    if (poly_ctx.kind != RingKind::Poly) fail(Err::WrongRing, "divergence demo needs a poly ring");
    const Rat r2 = poly_ctx.radius() * poly_ctx.radius();
    if (cq_norm2(z0) >= r2)
        fail(Err::DegenerateDisk, "z0 must lie strictly inside the disk");
    DivergenceDemo out;
    out.z0 = z0;
    out.rho = inner_radius(z0, poly_ctx.radius());
    Rat bound(1);
    for (unsigned long n = 0; n <= n_max; ++n) {
        out.rows.push_back({n, bound});
        bound *= out.rho;
    }
    return out;
}

}  // namespace crat
