#include "crat/complexq.hpp"

#include "crat/error.hpp"

namespace crat {

CRat cq_add(const CRat& x, const CRat& y) { return {x.re + y.re, x.im + y.im}; }
CRat cq_sub(const CRat& x, const CRat& y) { return {x.re - y.re, x.im - y.im}; }

CRat cq_mul(const CRat& x, const CRat& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}

CRat cq_div(const CRat& x, const CRat& y) {
    Rat n = cq_norm2(y);
    if (n == 0) fail(Err::ZeroDivisor, "complex division by zero");
    CRat t = cq_mul(x, cq_conj(y));
    return {t.re / n, t.im / n};
}

CRat cq_neg(const CRat& x) { return {-x.re, -x.im}; }
CRat cq_conj(const CRat& x) { return {x.re, -x.im}; }

Rat cq_norm2(const CRat& x) { return x.re * x.re + x.im * x.im; }

std::optional<Rat> cq_abs_exact(const CRat& x) {
    if (x.im == 0) return rat_abs(x.re);
    if (x.re == 0) return rat_abs(x.im);
    return rat_sqrt_exact(cq_norm2(x));
}

RealBound cq_abs_bound(const CRat& x, unsigned prec_bits) {
    if (auto e = cq_abs_exact(x)) return RealBound::point(*e);
    return sqrt_bound(cq_norm2(x), prec_bits);
}

CRat cq_pow(const CRat& x, unsigned long e) {
    CRat acc{Rat(1), Rat(0)};
    CRat base = x;
    while (e > 0) {
        if (e & 1) acc = cq_mul(acc, base);
        base = cq_mul(base, base);
        e >>= 1;
    }
    return acc;
}

}  // namespace crat
