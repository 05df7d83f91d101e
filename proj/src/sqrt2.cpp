#include "crat/sqrt2.hpp"

#include "crat/error.hpp"

namespace crat {

Quad quad_add(const Quad& x, const Quad& y) { return {x.a + y.a, x.b + y.b}; }
Quad quad_sub(const Quad& x, const Quad& y) { return {x.a - y.a, x.b - y.b}; }

Quad quad_mul(const Quad& x, const Quad& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

Quad quad_neg(const Quad& x) { return {-x.a, -x.b}; }

Int quad_norm(const Quad& x) { return x.a * x.a - 2 * x.b * x.b; }

std::optional<Quad> quad_div_exact(const Quad& x, const Quad& d) {
    if (d.is_zero()) fail(Err::ZeroDivisor, "division by zero in Z[sqrt2]");
    // x / d = x * conj(d) / norm(d); exact iff both coordinates divide.
    Int n = quad_norm(d);
    Quad t = quad_mul(x, Quad{d.a, -d.b});
    if (!mpz_divisible_p(t.a.get_mpz_t(), n.get_mpz_t())) return std::nullopt;
    if (!mpz_divisible_p(t.b.get_mpz_t(), n.get_mpz_t())) return std::nullopt;
    return Quad{t.a / n, t.b / n};
}

QuadQ qq_add(const QuadQ& x, const QuadQ& y) { return {x.a + y.a, x.b + y.b}; }
QuadQ qq_sub(const QuadQ& x, const QuadQ& y) { return {x.a - y.a, x.b - y.b}; }

QuadQ qq_mul(const QuadQ& x, const QuadQ& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadQ qq_neg(const QuadQ& x) { return {-x.a, -x.b}; }

QuadQ qq_inv(const QuadQ& x) {
    Rat n = x.a * x.a - 2 * x.b * x.b;
    if (n == 0) fail(Err::ZeroDivisor, "inverse of zero in Q(sqrt2)");
    return {x.a / n, -x.b / n};
}

int qq_sign(const QuadQ& x) {
    const int sa = sgn(x.a);
    const int sb = sgn(x.b);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: compare a^2 against 2 b^2. Equality is impossible for
    // nonzero rational a, b since sqrt(2) is irrational.
    Rat lhs = x.a * x.a;
    Rat rhs = 2 * x.b * x.b;
    if (lhs == rhs) fail(Err::Internal, "a^2 == 2 b^2 with nonzero parts");
    const bool a_dominates = lhs > rhs;
    return a_dominates ? sa : sb;
}

QuadQ qq_abs(const QuadQ& x) { return qq_sign(x) < 0 ? qq_neg(x) : x; }

Int qq_floor(const QuadQ& x) {
    if (x.b == 0) {
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), x.a.get_num().get_mpz_t(), x.a.get_den().get_mpz_t());
        return f;
    }
    // Bracket with rational enclosures, then pin down by exact comparison.
    for (unsigned prec = 16;; prec *= 2) {
        RealBound e = qq_enclosure(x, prec);
        Int lo_f;
        mpz_fdiv_q(lo_f.get_mpz_t(), e.lo.get_num().get_mpz_t(), e.lo.get_den().get_mpz_t());
        Int hi_f;
        mpz_fdiv_q(hi_f.get_mpz_t(), e.hi.get_num().get_mpz_t(), e.hi.get_den().get_mpz_t());
        if (lo_f == hi_f) return lo_f;
        // The enclosure straddles an integer. b != 0 means x is irrational
        // so refinement always separates; verify candidates exactly anyway.
        Int cand = hi_f;
        if (qq_cmp(x, QuadQ{Rat(cand), Rat(0)}) >= 0) return cand;
        if (prec > 4096) fail(Err::Internal, "qq_floor failed to converge");
    }
}

Int qq_round(const QuadQ& x) {
    if (qq_sign(x) < 0) return -qq_round(qq_neg(x));
    // x >= 0: round(x) = floor(x + 1/2) with the tie going up (away from 0).
    return qq_floor(qq_add(x, QuadQ{Rat(1, 2), Rat(0)}));
}

RealBound qq_enclosure(const QuadQ& x, unsigned prec_bits) {
    if (x.b == 0) return RealBound::point(x.a);
    RealBound s2 = sqrt_bound(Rat(2), prec_bits);
    Rat lo, hi;
    if (x.b > 0) {
        lo = x.a + x.b * s2.lo;
        hi = x.a + x.b * s2.hi;
    } else {
        lo = x.a + x.b * s2.hi;
        hi = x.a + x.b * s2.lo;
    }
    return {lo, hi};
}

RealBound qq_abs_bound(const QuadQ& x, unsigned prec_bits) {
    QuadQ ax = qq_abs(x);
    RealBound e = qq_enclosure(ax, prec_bits);
    if (e.lo < 0) e.lo = 0;
    return e;
}

}  // namespace crat
