#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace crat {

// All arithmetic in the library is exact: arbitrary-precision integers and
// canonical rationals. No value anywhere is ever a float.
using Int = mpz_class;
using Rat = mpq_class;

/// Canonical rational from numerator/denominator (reduced, positive den).
Rat make_rat(const Int& num, const Int& den);

Int pow_int(const Int& base, unsigned long exp);
Rat pow_rat(const Rat& base, unsigned long exp);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

Rat rat_min(const Rat& a, const Rat& b);
Rat rat_max(const Rat& a, const Rat& b);

/// "num/den" with the denominator always present ("0/1", "3/2", "-5/1").
std::string rat_to_string(const Rat& q);

/// Accepts "a/b" or a bare integer "a". Throws CratError(Schema) on garbage.
Rat rat_from_string(const std::string& s);

/// Exact rational square root when one exists (both num and den perfect squares).
std::optional<Rat> rat_sqrt_exact(const Rat& q);

/// Certified enclosure of a nonnegative real quantity. Width shrinks as the
/// producing code is asked for more precision; lo == hi means exact.
struct RealBound {
    Rat lo;
    Rat hi;
    bool exact() const { return lo == hi; }
    static RealBound point(const Rat& v) { return {v, v}; }
};

RealBound rb_add(const RealBound& a, const RealBound& b);
RealBound rb_mul(const RealBound& a, const RealBound& b);  // both nonnegative
RealBound rb_scale(const RealBound& a, const Rat& c);      // c >= 0

/// Enclosure of sqrt(q) for q >= 0 with width <= 2^-prec_bits.
RealBound sqrt_bound(const Rat& q, unsigned prec_bits);

/// C(n, k) as an exact integer.
Int binomial(unsigned long n, unsigned long k);

Int factorial(unsigned long n);

}  // namespace crat
