#include "crat/witness.hpp"

#include "crat/error.hpp"
#include "crat/quadratic.hpp"

namespace crat {

namespace {

/// u a + v b = gcd(a, b) with u normalized into the symmetric range mod b/g.
void ext_gcd_normalized(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (b != 0 && g != 0) {
        Int m_abs = int_abs(b / g);
        if (m_abs != 0 && 2 * int_abs(u) > m_abs) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), u.get_mpz_t(), m_abs.get_mpz_t());
            if (2 * r > m_abs) r -= m_abs;
            u = r;
            v = (g - u * a) / b;
        }
    }
}

Rat recomputed_bound(const PseudoValuation& V, const Element& i, const Element& j, const Rat& cap) {
    Element defect = elem_sub(one(i.ring), elem_add(i, j));
    if (cap == 0) {
        if (!defect.is_zero()) fail(Err::Internal, "exact witness with a nonzero defect");
        return Rat(0);
    }
    if (auto e = V.exact_value(defect)) return *e;
    // cap is a certified bound already in hand, so stay at or below it.
    for (unsigned prec = 64;; prec *= 2) {
        RealBound b = V.bound(defect, prec);
        if (b.hi <= cap) return b.hi;
        if (prec > (1u << 14)) return cap;
    }
}

TCMWitness finish_witness(PrincipalIdeal I, PrincipalIdeal J, Element i, Element j, Rat bound,
                          const PseudoValuation& V) {
    if (!I.contains(i)) fail(Err::Internal, "witness i-part escaped its ideal");
    if (!J.contains(j)) fail(Err::Internal, "witness j-part escaped its ideal");
    Rat tight = rat_min(bound, recomputed_bound(V, i, j, bound));
    return {std::move(I), std::move(J), std::move(i), std::move(j), std::move(tight), V};
}

std::vector<LinearFactor> subtract_factors(const std::vector<LinearFactor>& fs,
                                           const std::vector<LinearFactor>& common) {
    std::vector<LinearFactor> out;
    for (const auto& f : fs) {
        unsigned long c = factor_multiplicity(common, f.root);
        if (f.mult > c) out.push_back({f.root, f.mult - c});
    }
    return out;
}

}  // namespace

std::optional<DensityCert> try_density_certificate(const PrincipalIdeal& I, const PseudoValuation& V,
                                                   const Rat& eps, unsigned long degree_budget) {
    if (eps <= 0) fail(Err::Schema, "tolerance must be positive");
    if (!(I.ring == V.ring())) fail(Err::MixedRings, "ideal and valuation rings differ");
    if (I.is_whole_ring()) return DensityCert{one(I.ring), Rat(0)};
    if (eps > 1) return DensityCert{zero(I.ring), Rat(1)};  // V(1 - 0) = 1 < eps
    if (I.is_zero_ideal()) return std::nullopt;

    switch (I.ring.kind) {
        case RingKind::PadicInt: {
            const Int& p = I.ring.prime();
            const Int& g = I.generator.as_int();
            if (mpz_divisible_p(g.get_mpz_t(), p.get_mpz_t())) return std::nullopt;
            unsigned long m = padic_ball_exponent(p, eps);
            Int modulus = pow_int(p, m);
            Int u;
            if (mpz_invert(u.get_mpz_t(), g.get_mpz_t(), modulus.get_mpz_t()) == 0)
                fail(Err::Internal, "modular inverse vanished for unit residue");
            Element a = make_int_element(I.ring, g * u);
            Rat bound = padic_value(Int(1 - g * u), p);
            return DensityCert{std::move(a), std::move(bound)};
        }
        case RingKind::QuadInt: {
            QuadApprox s = quad_inverse_approx(I.generator.as_quad(), eps);
            Element a = make_quad_element(I.ring, quad_mul(I.generator.as_quad(), s.value));
            return DensityCert{std::move(a), s.bound};
        }
        case RingKind::Poly: {
            for (const auto& f : *I.factors)
                if (cq_norm2(f.root) <= I.ring.radius() * I.ring.radius()) return std::nullopt;
            PolyDensityCert c = ideal_density_certificate(I, eps, degree_budget);
            return DensityCert{std::move(c.a), std::move(c.bound)};
        }
    }
    fail(Err::Internal, "unreachable");
}

TCMWitness tcm_witness(const PrincipalIdeal& I, const PrincipalIdeal& J, const PseudoValuation& V,
                       const Rat& eps, unsigned long degree_budget) {
    if (!(I.ring == J.ring)) fail(Err::MixedRings, "witness across rings");
    if (!(I.ring == V.ring())) fail(Err::MixedRings, "valuation ring mismatch");
    if (eps < 0) fail(Err::Schema, "tolerance must be nonnegative");
    const RingContext& ctx = I.ring;

    if (I.is_whole_ring()) return finish_witness(I, J, one(ctx), zero(ctx), Rat(0), V);
    if (J.is_whole_ring()) return finish_witness(I, J, zero(ctx), one(ctx), Rat(0), V);
    if (I.is_zero_ideal() && J.is_zero_ideal())
        fail(Err::NotTCM, "the zero ideal is not TCM with itself");

    switch (ctx.kind) {
        case RingKind::PadicInt: {
            const Int& a = I.generator.as_int();
            const Int& b = J.generator.as_int();
            Int g, u, v;
            ext_gcd_normalized(a, b, g, u, v);
            if (g == 1)
                return finish_witness(I, J, make_int_element(ctx, u * a), make_int_element(ctx, v * b),
                                      Rat(0), V);
            if (eps == 0)
                fail(Err::InexactWitness,
                     "generators share the factor " + g.get_str() + "; no exact witness");
            const Int& p = ctx.prime();
            if (auto cert = try_density_certificate(I, V, eps, degree_budget))
                return finish_witness(I, J, cert->a, zero(ctx), cert->bound, V);
            if (auto cert = try_density_certificate(J, V, eps, degree_budget))
                return finish_witness(I, J, zero(ctx), cert->a, cert->bound, V);
            fail(Err::NotTCM, "p = " + p.get_str() + " divides both generators");
        }
        case RingKind::QuadInt: {
            // Z[sqrt2] is topologically simple: every nonzero ideal is dense.
            if (!I.is_zero_ideal()) {
                Int n = quad_norm(I.generator.as_quad());
                if (n == 1 || n == -1)
                    return finish_witness(I, J, one(ctx), zero(ctx), Rat(0), V);
                if (eps == 0) fail(Err::InexactWitness, "non-unit generator needs a tolerance");
                auto cert = try_density_certificate(I, V, eps, degree_budget);
                return finish_witness(I, J, cert->a, zero(ctx), cert->bound, V);
            }
            if (eps == 0) fail(Err::InexactWitness, "zero ideal paired with approximate witness");
            auto cert = try_density_certificate(J, V, eps, degree_budget);
            if (!cert) fail(Err::NotTCM, "neither ideal is dense");
            return finish_witness(I, J, zero(ctx), cert->a, cert->bound, V);
        }
        case RingKind::Poly: {
            if (I.is_zero_ideal() || J.is_zero_ideal()) {
                const PrincipalIdeal& other = I.is_zero_ideal() ? J : I;
                if (eps == 0) fail(Err::InexactWitness, "zero ideal paired with approximate witness");
                auto cert = try_density_certificate(other, V, eps, degree_budget);
                if (!cert) fail(Err::NotTCM, "sum with the zero ideal is not dense");
                if (I.is_zero_ideal())
                    return finish_witness(I, J, zero(ctx), cert->a, cert->bound, V);
                return finish_witness(I, J, cert->a, zero(ctx), cert->bound, V);
            }
            if (!I.factors || !J.factors) fail(Err::Schema, "poly witness needs factored ideals");

            std::vector<LinearFactor> common;
            for (const auto& f : *I.factors) {
                unsigned long m = std::min(f.mult, factor_multiplicity(*J.factors, f.root));
                if (m > 0) common.push_back({f.root, m});
            }
            if (common.empty()) {
                PolyExtGcd eg = poly_ext_gcd(I.generator.as_poly(), J.generator.as_poly());
                if (poly_degree(eg.g) != 0)
                    fail(Err::Internal, "coprime factored forms with nonconstant gcd");
                Element i = make_poly_element(ctx, poly_mul(eg.u, I.generator.as_poly()));
                Element j = make_poly_element(ctx, poly_mul(eg.v, J.generator.as_poly()));
                return finish_witness(I, J, std::move(i), std::move(j), Rat(0), V);
            }
            for (const auto& f : common)
                if (cq_norm2(f.root) <= ctx.radius() * ctx.radius())
                    fail(Err::NotTCM, "shared root inside the disk defeats density");
            if (eps == 0) fail(Err::InexactWitness, "shared outside roots need a tolerance");

            // 1 ~ c in <common>; distribute c over the coprime remainders.
            PrincipalIdeal shared = PrincipalIdeal::poly_from_factors(ctx, common);
            PolyDensityCert cert = ideal_density_certificate(shared, eps, degree_budget);
            PolyC rem_i = PrincipalIdeal::poly_from_factors(ctx, subtract_factors(*I.factors, common))
                              .generator.as_poly();
            PolyC rem_j = PrincipalIdeal::poly_from_factors(ctx, subtract_factors(*J.factors, common))
                              .generator.as_poly();
            PolyExtGcd eg = poly_ext_gcd(rem_i, rem_j);
            if (poly_degree(eg.g) != 0) fail(Err::Internal, "remainders after gcd removal not coprime");
            PolyC c = cert.a.as_poly();
            Element i = make_poly_element(ctx, poly_mul(poly_mul(eg.u, rem_i), c));
            Element j = make_poly_element(ctx, poly_mul(poly_mul(eg.v, rem_j), c));
            return finish_witness(I, J, std::move(i), std::move(j), cert.bound, V);
        }
    }
    fail(Err::Internal, "unreachable");
}

bool tcm_decide(const PrincipalIdeal& I, const PrincipalIdeal& J) {
    if (!(I.ring == J.ring)) fail(Err::MixedRings, "tcm across rings");
    if (I.is_whole_ring() || J.is_whole_ring()) return true;
    switch (I.ring.kind) {
        case RingKind::PadicInt: return padic_tcm(I, J);
        case RingKind::QuadInt:
            // Z[sqrt2] is topologically simple: any nonzero ideal is dense.
            return !I.is_zero_ideal() || !J.is_zero_ideal();
        case RingKind::Poly: {
            const Rat r2 = I.ring.radius() * I.ring.radius();
            auto dense = [&](const PrincipalIdeal& K) {
                if (K.is_zero_ideal()) return false;
                for (const auto& f : *K.factors)
                    if (cq_norm2(f.root) <= r2) return false;
                return true;
            };
            if (I.is_zero_ideal()) return dense(J);
            if (J.is_zero_ideal()) return dense(I);
            // Closure of I + J is cut out by the shared inside roots.
            for (const auto& f : *I.factors)
                if (factor_multiplicity(*J.factors, f.root) > 0 && cq_norm2(f.root) <= r2)
                    return false;
            return true;
        }
    }
    fail(Err::Internal, "unreachable");
}

TCMWitness combine_witnesses_product(const TCMWitness& w1, const TCMWitness& w2) {
    if (!(w1.I == w2.I)) fail(Err::MismatchedI, "product combination requires a shared I");
    if (!(w1.valuation == w2.valuation)) fail(Err::MismatchedI, "witness valuations differ");
    const RingContext& ctx = w1.I.ring;

    Element i = elem_add(elem_add(elem_mul(w1.i, w2.i), elem_mul(w1.i, w2.j)), elem_mul(w1.j, w2.i));
    Element j = elem_mul(w1.j, w2.j);

    PrincipalIdeal J = [&] {
        switch (ctx.kind) {
            case RingKind::PadicInt:
                return PrincipalIdeal::integers(ctx, Int(w1.J.generator.as_int() * w2.J.generator.as_int()));
            case RingKind::QuadInt:
                return PrincipalIdeal::quadratic(ctx,
                                                 quad_mul(w1.J.generator.as_quad(), w2.J.generator.as_quad()));
            case RingKind::Poly: {
                if (w1.J.is_zero_ideal() || w2.J.is_zero_ideal()) return PrincipalIdeal::poly_zero(ctx);
                std::vector<LinearFactor> fs = *w1.J.factors;
                fs.insert(fs.end(), w2.J.factors->begin(), w2.J.factors->end());
                return PrincipalIdeal::poly_from_factors(ctx, std::move(fs));
            }
        }
        fail(Err::Internal, "unreachable");
    }();

    // 1 - uv = (1 - u) + u (1 - v) with u = i1+j1, v = i2+j2 and V(u) <= 1 + b1.
    Rat formula = w1.bound + (Rat(1) + w1.bound) * w2.bound;
    Rat bound = rat_min(formula, recomputed_bound(w1.valuation, i, j, formula));
    if (!w1.I.contains(i)) fail(Err::Internal, "combined i-part escaped I");
    if (!J.contains(j)) fail(Err::Internal, "combined j-part escaped the product ideal");
    return {w1.I, std::move(J), std::move(i), std::move(j), std::move(bound), w1.valuation};
}

TCMWitness intersection_witness(const PrincipalIdeal& I, const std::vector<PrincipalIdeal>& others,
                                const PseudoValuation& V, const Rat& eps, unsigned long degree_budget) {
    if (eps < 0) fail(Err::Schema, "tolerance must be nonnegative");
    const RingContext& ctx = I.ring;
    if (others.empty()) {
        PrincipalIdeal whole = PrincipalIdeal::whole_ring(ctx);
        return {I, std::move(whole), zero(ctx), one(ctx), Rat(0), V};
    }

    const Rat eps_base = eps > 0 ? rat_min(eps, Rat(1, 2)) : Rat(0);
    auto stage_eps = [&](size_t k) {  // k is 1-based
        return eps > 0 ? Rat(eps_base / pow_int(2, static_cast<unsigned long>(k) + 1)) : Rat(0);
    };

    TCMWitness acc = tcm_witness(I, others[0], V, stage_eps(1), degree_budget);
    for (size_t k = 1; k < others.size(); ++k) {
        TCMWitness next = tcm_witness(I, others[k], V, stage_eps(k + 1), degree_budget);
        acc = combine_witnesses_product(acc, next);
    }
    if (eps > 0 && !(acc.bound < eps))
        fail(Err::Internal, "geometric split failed to meet the requested tolerance");

    // The j-part lives in the product, which sits inside the meet; expose the
    // meet as the witness ideal where the lattice supports it.
    if (ctx.kind != RingKind::QuadInt) {
        PrincipalIdeal meet = others[0];
        for (size_t k = 1; k < others.size(); ++k) meet = ideal_meet(meet, others[k]);
        if (!meet.contains(acc.j)) fail(Err::Internal, "j-part escaped the meet");
        acc.J = std::move(meet);
    }
    return acc;
}

}  // namespace crat
