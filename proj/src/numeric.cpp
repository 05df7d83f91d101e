#include "crat/numeric.hpp"

#include "crat/error.hpp"

namespace crat::detail {
extern int gmp_pool_anchor;
[[gnu::used]] static const int* const keep_gmp_pool = &gmp_pool_anchor;
}  // namespace crat::detail

namespace crat {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) fail(Err::Schema, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int pow_int(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat pow_rat(const Rat& base, unsigned long exp) {
    return Rat(pow_int(base.get_num(), exp), pow_int(base.get_den(), exp));
}

Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
Rat rat_max(const Rat& a, const Rat& b) { return a > b ? a : b; }

std::string rat_to_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) fail(Err::Schema, "empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Int n(s);
            return Rat(n);
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        fail(Err::Schema, "bad rational literal '" + s + "'");
    }
}

std::optional<Rat> rat_sqrt_exact(const Rat& q) {
    if (q < 0) return std::nullopt;
    Int ns, nr, ds, dr;
    mpz_sqrtrem(ns.get_mpz_t(), nr.get_mpz_t(), q.get_num().get_mpz_t());
    if (nr != 0) return std::nullopt;
    mpz_sqrtrem(ds.get_mpz_t(), dr.get_mpz_t(), q.get_den().get_mpz_t());
    if (dr != 0) return std::nullopt;
    return make_rat(ns, ds);
}

RealBound rb_add(const RealBound& a, const RealBound& b) {
    return {Rat(a.lo + b.lo), Rat(a.hi + b.hi)};
}

RealBound rb_mul(const RealBound& a, const RealBound& b) {
    return {Rat(a.lo * b.lo), Rat(a.hi * b.hi)};
}

RealBound rb_scale(const RealBound& a, const Rat& c) {
    return {Rat(a.lo * c), Rat(a.hi * c)};
}

RealBound sqrt_bound(const Rat& q, unsigned prec_bits) {
    if (q < 0) fail(Err::Internal, "sqrt_bound of negative value");
    if (auto e = rat_sqrt_exact(q)) return RealBound::point(*e);
    // floor(sqrt(num*den * 4^p)) / (den * 2^p) brackets sqrt(num/den)
    // within 1/(den*2^p) <= 2^-p.
    Int scale = pow_int(2, prec_bits);
    Int m = q.get_num() * q.get_den() * scale * scale;
    Int s;
    mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
    Int d = q.get_den() * scale;
    return {make_rat(s, d), make_rat(s + 1, d)};
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

const char* err_name(Err e) {
    switch (e) {
        case Err::MixedRings: return "MixedRings";
        case Err::WrongRing: return "WrongRing";
        case Err::ZeroDivisor: return "ZeroDivisor";
        case Err::UnsupportedRing: return "UnsupportedRing";
        case Err::NotTCM: return "NotTCM";
        case Err::MismatchedI: return "MismatchedI";
        case Err::EmptySystem: return "EmptySystem";
        case Err::NotContractive: return "NotContractive";
        case Err::ToleranceViolation: return "ToleranceViolation";
        case Err::InexactWitness: return "InexactWitness";
        case Err::NotDescending: return "NotDescending";
        case Err::DegenerateDisk: return "DegenerateDisk";
        case Err::PoleInsideDisk: return "PoleInsideDisk";
        case Err::DuplicatePoints: return "DuplicatePoints";
        case Err::DegreeBudget: return "DegreeBudget";
        case Err::Schema: return "Schema";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace crat
