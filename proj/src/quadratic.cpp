#include "crat/quadratic.hpp"

#include "crat/error.hpp"

namespace crat {

namespace {

const QuadQ kUnit{Rat(-1), Rat(1)};      // u = sqrt2 - 1, |u| ~ 0.4142
const QuadQ kUnitInv{Rat(1), Rat(1)};    // 1/u = sqrt2 + 1

/// Number of greedy digits: K = 1 + min{ j >= 0 : scale * u^j < eps }.
/// The tail after K digits is u^K * |e_K| <= u^K (1+sqrt2)/2 = u^(K-1)/2,
/// so the final error is below scale * u^(K-1) / 2 < eps / 2.
unsigned long digit_count(const QuadQ& scale, const Rat& eps) {
    QuadQ cur = scale;
    const QuadQ eps_q{eps, Rat(0)};
    for (unsigned long j = 0;; ++j) {
        if (qq_cmp(cur, eps_q) < 0) return j + 1;
        cur = qq_mul(cur, kUnit);
        if (j > 100000) fail(Err::Internal, "greedy digit count diverged");
    }
}

/// Greedy expansion of t in powers of u with nearest-integer digits.
Quad greedy_expand(QuadQ t, unsigned long digits) {
    Quad s{};
    Quad u_pow{Int(1), Int(0)};
    for (unsigned long k = 0; k < digits; ++k) {
        if (t.is_zero()) break;  // expansion terminated: result exact
        Int c = qq_round(t);
        if (c != 0) s = quad_add(s, quad_mul(Quad{c, Int(0)}, u_pow));
        t = qq_mul(qq_sub(t, QuadQ{Rat(c), Rat(0)}), kUnitInv);
        u_pow = quad_mul(u_pow, Quad{Int(-1), Int(1)});
    }
    return s;
}

}  // namespace

Rat qq_upper_below(const QuadQ& x, const Rat& below) {
    for (unsigned prec = 64;; prec *= 2) {
        RealBound b = qq_abs_bound(x, prec);
        if (b.hi < below) return b.hi;
        if (b.lo >= below)
            fail(Err::ToleranceViolation, "|x| not below " + rat_to_string(below));
        if (prec > (1u << 14)) fail(Err::Internal, "qq_upper_below did not converge");
    }
}

QuadApprox quad_approx(const Rat& target, const Rat& eps) {
    if (eps <= 0) fail(Err::Schema, "tolerance must be positive");
    const QuadQ t{target, Rat(0)};
    Quad s = greedy_expand(t, digit_count(QuadQ{Rat(1), Rat(0)}, eps));
    QuadQ err = qq_sub(QuadQ(s), t);
    if (err.is_zero()) return {std::move(s), Rat(0)};
    return {std::move(s), qq_upper_below(err, eps)};
}

QuadApprox quad_inverse_approx(const Quad& d, const Rat& eps) {
    if (d.is_zero()) fail(Err::ZeroDivisor, "inverse of zero in Z[sqrt2]");
    Int n = quad_norm(d);
    if (n == 1 || n == -1) {
        // Unit: conj(d)/norm(d) is the exact inverse inside the ring.
        Quad inv{d.a, -d.b};
        if (n == -1) inv = quad_neg(inv);
        return {std::move(inv), Rat(0)};
    }
    if (eps <= 0) fail(Err::InexactWitness, "exact inverse requires a unit generator");

    const QuadQ dq(d);
    const QuadQ t = qq_inv(dq);
    Quad s = greedy_expand(t, digit_count(qq_abs(dq), eps));
    QuadQ err = qq_sub(QuadQ(quad_mul(s, d)), QuadQ{Rat(1), Rat(0)});
    if (err.is_zero()) return {std::move(s), Rat(0)};
    if (qq_cmp(qq_abs(err), QuadQ{eps, Rat(0)}) < 0)
        return {std::move(s), qq_upper_below(err, eps)};

    // The a-priori tail bound guarantees success; reachable only if that
    // reasoning were broken, in which case the bounded scan still certifies.
    if (auto scanned = quad_inverse_scan(d, eps, 512)) return *scanned;
    fail(Err::Internal, "greedy inverse failed certification");
}

std::optional<QuadApprox> quad_inverse_scan(const Quad& d, const Rat& eps, long coeff_bound) {
    if (d.is_zero()) fail(Err::ZeroDivisor, "inverse of zero in Z[sqrt2]");
    std::optional<Quad> best;
    std::optional<QuadQ> best_err;
    for (long a = -coeff_bound; a <= coeff_bound; ++a) {
        for (long b = -coeff_bound; b <= coeff_bound; ++b) {
            Quad s{Int(a), Int(b)};
            QuadQ err = qq_abs(qq_sub(QuadQ(quad_mul(s, d)), QuadQ{Rat(1), Rat(0)}));
            if (qq_cmp(err, QuadQ{eps, Rat(0)}) >= 0) continue;
            if (!best_err || qq_cmp(err, *best_err) < 0) {
                best = std::move(s);
                best_err = std::move(err);
            }
        }
    }
    if (!best) return std::nullopt;
    if (best_err->is_zero()) return QuadApprox{*best, Rat(0)};
    return QuadApprox{*best, qq_upper_below(*best_err, eps)};
}

}  // namespace crat
