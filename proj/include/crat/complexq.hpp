#pragma once

#include "crat/numeric.hpp"

namespace crat {

/// Complex number with exact rational real and imaginary parts.
struct CRat {
    Rat re;
    Rat im;

    CRat() : re(0), im(0) {}
    CRat(Rat r) : re(std::move(r)), im(0) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool operator==(const CRat&) const = default;
    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
};

CRat cq_add(const CRat& x, const CRat& y);
CRat cq_sub(const CRat& x, const CRat& y);
CRat cq_mul(const CRat& x, const CRat& y);
CRat cq_div(const CRat& x, const CRat& y);  // throws ZeroDivisor
CRat cq_neg(const CRat& x);
CRat cq_conj(const CRat& x);

/// |x|^2 = re^2 + im^2, exact.
Rat cq_norm2(const CRat& x);

/// |x| when it is rational (norm2 a perfect square), nullopt otherwise.
std::optional<Rat> cq_abs_exact(const CRat& x);

/// Certified enclosure of |x|.
RealBound cq_abs_bound(const CRat& x, unsigned prec_bits);

CRat cq_pow(const CRat& x, unsigned long e);

}  // namespace crat
