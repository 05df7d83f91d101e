#include "crat/ideal.hpp"

#include <algorithm>

#include "crat/error.hpp"

namespace crat {

namespace {

bool crat_less(const CRat& a, const CRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
}

std::vector<LinearFactor> normalize_factors(std::vector<LinearFactor> fs) {
    std::sort(fs.begin(), fs.end(),
              [](const LinearFactor& x, const LinearFactor& y) { return crat_less(x.root, y.root); });
    std::vector<LinearFactor> merged;
    for (auto& f : fs) {
        if (f.mult == 0) continue;
        if (!merged.empty() && merged.back().root == f.root)
            merged.back().mult += f.mult;
        else
            merged.push_back(std::move(f));
    }
    return merged;
}

PolyC factors_product(const std::vector<LinearFactor>& fs) {
    PolyC p = poly_one();
    for (const auto& f : fs) p = poly_mul(p, poly_linear_power(f.root, f.mult));
    return p;
}

}  // namespace

bool PrincipalIdeal::is_whole_ring() const {
    switch (ring.kind) {
        case RingKind::PadicInt: return int_abs(generator.as_int()) == 1;
        case RingKind::QuadInt: {
            Int n = quad_norm(generator.as_quad());
            return n == 1 || n == -1;
        }
        case RingKind::Poly: return factors && factors->empty();
    }
    return false;
}

bool PrincipalIdeal::contains(const Element& x) const {
    require_ring(x, ring);
    if (is_zero_ideal()) return x.is_zero();
    switch (ring.kind) {
        case RingKind::PadicInt:
            return mpz_divisible_p(x.as_int().get_mpz_t(), generator.as_int().get_mpz_t()) != 0;
        case RingKind::QuadInt: return quad_div_exact(x.as_quad(), generator.as_quad()).has_value();
        case RingKind::Poly: return x.is_zero() || poly_div_exact(x.as_poly(), generator.as_poly()).has_value();
    }
    return false;
}

PrincipalIdeal PrincipalIdeal::integers(const RingContext& ctx, Int gen) {
    if (ctx.kind != RingKind::PadicInt) fail(Err::WrongRing, "integer ideal in " + ctx.label());
    return {ctx, make_int_element(ctx, int_abs(gen)), std::nullopt};
}

PrincipalIdeal PrincipalIdeal::quadratic(const RingContext& ctx, Quad gen) {
    if (ctx.kind != RingKind::QuadInt) fail(Err::WrongRing, "quadratic ideal in " + ctx.label());
    return {ctx, make_quad_element(ctx, std::move(gen)), std::nullopt};
}

PrincipalIdeal PrincipalIdeal::poly_from_factors(const RingContext& ctx, std::vector<LinearFactor> fs) {
    if (ctx.kind != RingKind::Poly) fail(Err::WrongRing, "poly ideal in " + ctx.label());
    auto norm = normalize_factors(std::move(fs));
    Element gen = make_poly_element(ctx, factors_product(norm));
    return {ctx, std::move(gen), std::move(norm)};
}

PrincipalIdeal PrincipalIdeal::poly_zero(const RingContext& ctx) {
    if (ctx.kind != RingKind::Poly) fail(Err::WrongRing, "poly ideal in " + ctx.label());
    return {ctx, zero(ctx), std::nullopt};
}

PrincipalIdeal PrincipalIdeal::whole_ring(const RingContext& ctx) {
    switch (ctx.kind) {
        case RingKind::PadicInt: return integers(ctx, Int(1));
        case RingKind::QuadInt: return quadratic(ctx, Quad{Int(1), Int(0)});
        case RingKind::Poly: return poly_from_factors(ctx, {});
    }
    fail(Err::Internal, "unreachable");
}

static void require_same_ring(const PrincipalIdeal& I, const PrincipalIdeal& J) {
    if (!(I.ring == J.ring)) fail(Err::MixedRings, I.ring.label() + " vs " + J.ring.label());
}

static void require_poly_factored(const PrincipalIdeal& I) {
    if (!I.is_zero_ideal() && !I.factors)
        fail(Err::Schema, "poly ideal needs a factored form");
}

PrincipalIdeal ideal_add(const PrincipalIdeal& I, const PrincipalIdeal& J) {
    require_same_ring(I, J);
    switch (I.ring.kind) {
        case RingKind::PadicInt: {
            Int g;
            mpz_gcd(g.get_mpz_t(), I.generator.as_int().get_mpz_t(), J.generator.as_int().get_mpz_t());
            return PrincipalIdeal::integers(I.ring, g);
        }
        case RingKind::QuadInt: fail(Err::UnsupportedRing, "ideal lattice over Z[sqrt2]");
        case RingKind::Poly: {
            if (I.is_zero_ideal()) return J;
            if (J.is_zero_ideal()) return I;
            require_poly_factored(I);
            require_poly_factored(J);
            std::vector<LinearFactor> common;
            for (const auto& f : *I.factors) {
                unsigned long m = std::min(f.mult, factor_multiplicity(*J.factors, f.root));
                if (m > 0) common.push_back({f.root, m});
            }
            return PrincipalIdeal::poly_from_factors(I.ring, std::move(common));
        }
    }
    fail(Err::Internal, "unreachable");
}

PrincipalIdeal ideal_meet(const PrincipalIdeal& I, const PrincipalIdeal& J) {
    require_same_ring(I, J);
    switch (I.ring.kind) {
        case RingKind::PadicInt: {
            Int l;
            mpz_lcm(l.get_mpz_t(), I.generator.as_int().get_mpz_t(), J.generator.as_int().get_mpz_t());
            return PrincipalIdeal::integers(I.ring, l);
        }
        case RingKind::QuadInt: fail(Err::UnsupportedRing, "ideal lattice over Z[sqrt2]");
        case RingKind::Poly: {
            if (I.is_zero_ideal() || J.is_zero_ideal()) return PrincipalIdeal::poly_zero(I.ring);
            require_poly_factored(I);
            require_poly_factored(J);
            std::vector<LinearFactor> all = *I.factors;
            for (const auto& f : *J.factors) {
                unsigned long mi = factor_multiplicity(*I.factors, f.root);
                if (mi == 0)
                    all.push_back(f);
                else if (f.mult > mi)
                    for (auto& g : all)
                        if (g.root == f.root) g.mult = f.mult;
            }
            return PrincipalIdeal::poly_from_factors(I.ring, std::move(all));
        }
    }
    fail(Err::Internal, "unreachable");
}

bool padic_tcm(const PrincipalIdeal& I, const PrincipalIdeal& J) {
    require_same_ring(I, J);
    if (I.ring.kind != RingKind::PadicInt) fail(Err::WrongRing, "padic_tcm on " + I.ring.label());
    const Int& p = I.ring.prime();
    const bool p_divides_a = mpz_divisible_p(I.generator.as_int().get_mpz_t(), p.get_mpz_t()) != 0;
    const bool p_divides_b = mpz_divisible_p(J.generator.as_int().get_mpz_t(), p.get_mpz_t()) != 0;
    return !p_divides_a || !p_divides_b;
}

unsigned long factor_multiplicity(const std::vector<LinearFactor>& fs, const CRat& root) {
    for (const auto& f : fs)
        if (f.root == root) return f.mult;
    return 0;
}

}  // namespace crat
