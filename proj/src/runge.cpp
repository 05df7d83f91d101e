#include "crat/runge.hpp"

#include "crat/error.hpp"
#include "crat/valuation.hpp"

namespace crat {

namespace {

struct PoleBounds {
    Rat lo;  // rational lower bound on |z_out|, strictly above R
    Rat up;  // rational upper bound on |z_out|
};

PoleBounds pole_bounds(const CRat& z_out, const Rat& R) {
    const Rat n2 = cq_norm2(z_out);
    if (n2 <= R * R) fail(Err::PoleInsideDisk, "pole must lie strictly outside the disk");
    for (unsigned prec = 32;; prec *= 2) {
        RealBound b = cq_abs_bound(z_out, prec);
        if (b.lo > R) return {b.lo, b.hi};
        if (prec > (1u << 14)) fail(Err::Internal, "pole modulus enclosure did not separate");
    }
}

/// Sum_{i > T} C(i+m-1, m-1) x^i for 0 < x < 1, exact via the closed form
/// (1-x)^-m minus the truncated partial sum. T < 0 gives the full series.
Rat binom_series_tail(unsigned long m, const Rat& x, long T) {
    Rat full = Rat(1) / pow_rat(Rat(1) - x, m);
    if (T < 0) return full;
    Rat partial(0);
    Rat coeff(1);  // C(i+m-1, m-1), updated incrementally
    Rat xi(1);
    for (long i = 0; i <= T; ++i) {
        if (i > 0) {
            coeff *= make_rat(Int(i) + Int(m) - 1, Int(i));
            xi *= x;
        }
        partial += coeff * xi;
    }
    return full - partial;
}

Rat upper_abs_coeff(const CRat& c) { return cq_abs_bound(c, 64).hi; }

}  // namespace

Rat runge_tail_bound(const PolyC& f, const CRat& z_out, unsigned long m, const Rat& R,
                     unsigned long degree) {
    if (m == 0) fail(Err::Schema, "pole order must be positive");
    PoleBounds w = pole_bounds(z_out, R);
    const Rat x = R / w.lo;  // < 1
    const Rat outer = pow_rat(R + w.up, m) / pow_rat(w.lo, m);
    Rat sum(0);
    Rat rj(1);
    for (size_t j = 0; j < f.size(); ++j) {
        if (!f[j].is_zero())
            sum += upper_abs_coeff(f[j]) * rj *
                   binom_series_tail(m, x, static_cast<long>(degree) - static_cast<long>(j));
        rj *= R;
    }
    return outer * sum;
}

RungeResult runge_disk_densify(const PolyC& f, const CRat& z_out, unsigned long m, const Rat& R,
                               const Rat& eps, unsigned long degree_budget) {
    if (eps <= 0) fail(Err::Schema, "tolerance must be positive");
    if (m == 0) fail(Err::Schema, "pole order must be positive");
    PoleBounds w = pole_bounds(z_out, R);
    (void)w;

    PolyC pole_power = poly_linear_power(z_out, m);
    if (poly_is_zero(f)) return {{}, Rat(0), 0};
    if (auto q = poly_div_exact(f, pole_power)) {
        unsigned long deg = q->empty() ? 0 : q->size() - 1;
        return {std::move(*q), Rat(0), deg};
    }

    unsigned long d = 0;
    Rat bound = runge_tail_bound(f, z_out, m, R, d);
    while (!(bound < eps)) {
        if (d >= degree_budget)
            fail(Err::DegreeBudget, "tail bound " + rat_to_string(bound) + " not below " +
                                        rat_to_string(eps) + " within degree " +
                                        std::to_string(degree_budget));
        ++d;
        bound = runge_tail_bound(f, z_out, m, R, d);
    }

    // Taylor coefficients of 1/(z - z_out)^m about 0:
    //   c_i = (-1)^m C(i+m-1, m-1) z_out^-(m+i),  built incrementally.
    const CRat inv_w = cq_div(CRat(Rat(1)), z_out);
    CRat c = cq_pow(inv_w, m);
    if (m % 2 == 1) c = cq_neg(c);
    PolyC series(d + 1);
    for (unsigned long k = 0; k <= d; ++k) {
        if (k > 0) {
            c = cq_mul(c, inv_w);
            c = cq_mul(c, CRat(make_rat(Int(k) + Int(m) - 1, Int(k))));
        }
        series[k] = c;
    }
    // Convolve with f: truncated series of f / (z - z_out)^m.
    PolyC h(d + 1);
    for (unsigned long k = 0; k <= d; ++k) {
        CRat acc;
        for (size_t j = 0; j < f.size() && j <= k; ++j)
            acc = cq_add(acc, cq_mul(f[j], series[k - j]));
        h[k] = acc;
    }
    h = poly_trim(std::move(h));

    return {std::move(h), std::move(bound), d};
}

IdealApprox poly_ideal_approx(const PolyC& f, const std::vector<LinearFactor>& factors, const Rat& R,
                              const Rat& eps, unsigned long degree_budget) {
    if (eps <= 0) fail(Err::Schema, "tolerance must be positive");
    if (factors.empty()) return {f, Rat(0)};  // ideal is the whole ring
    const size_t n = factors.size();
    PolyC cur = f;
    PolyC processed = poly_one();
    Rat sigma(0);
    for (size_t i = 0; i < n; ++i) {
        // Error introduced at this stage gets multiplied by the factors
        // already peeled off, so the stage tolerance shrinks accordingly.
        Rat mult_norm = poly_seminorm(processed, R);
        Rat cap = eps / (Rat(static_cast<long>(n)) * rat_max(Rat(1), mult_norm));
        RungeResult rr = runge_disk_densify(cur, factors[i].root, factors[i].mult, R, cap, degree_budget);
        sigma += rr.bound * mult_norm;
        processed = poly_mul(processed, poly_linear_power(factors[i].root, factors[i].mult));
        cur = std::move(rr.h);
    }
    return {std::move(cur), std::move(sigma)};
}

PolyDensityCert ideal_density_certificate(const PrincipalIdeal& I, const Rat& eps,
                                          unsigned long degree_budget) {
    if (I.ring.kind != RingKind::Poly) fail(Err::WrongRing, "density certificate on " + I.ring.label());
    if (eps <= 0) fail(Err::Schema, "tolerance must be positive");
    if (I.is_whole_ring()) return {one(I.ring), Rat(0)};
    if (I.is_zero_ideal() || !I.factors) fail(Err::PoleInsideDisk, "zero ideal is never dense");
    for (const auto& fct : *I.factors)
        if (cq_norm2(fct.root) <= I.ring.radius() * I.ring.radius())
            fail(Err::PoleInsideDisk, "ideal root inside the disk");
    IdealApprox ap = poly_ideal_approx(poly_one(), *I.factors, I.ring.radius(), eps, degree_budget);
    Element a = make_poly_element(I.ring, poly_mul(ap.multiplier, I.generator.as_poly()));
    return {std::move(a), std::move(ap.bound)};
}

}  // namespace crat
