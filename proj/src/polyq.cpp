#include "crat/polyq.hpp"

#include "crat/error.hpp"

namespace crat {

PolyC poly_trim(PolyC p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

long poly_degree(const PolyC& p) { return static_cast<long>(p.size()) - 1; }

PolyC poly_one() { return {CRat(Rat(1))}; }

PolyC poly_const(const CRat& c) { return poly_trim({c}); }

PolyC poly_add(const PolyC& f, const PolyC& g) {
    PolyC r(std::max(f.size(), g.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        CRat a = i < f.size() ? f[i] : CRat();
        CRat b = i < g.size() ? g[i] : CRat();
        r[i] = cq_add(a, b);
    }
    return poly_trim(std::move(r));
}

PolyC poly_sub(const PolyC& f, const PolyC& g) { return poly_add(f, poly_neg(g)); }

PolyC poly_mul(const PolyC& f, const PolyC& g) {
    if (f.empty() || g.empty()) return {};
    PolyC r(f.size() + g.size() - 1);
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < g.size(); ++j)
            r[i + j] = cq_add(r[i + j], cq_mul(f[i], g[j]));
    return poly_trim(std::move(r));
}

PolyC poly_neg(const PolyC& f) {
    PolyC r = f;
    for (auto& c : r) c = cq_neg(c);
    return r;
}

PolyC poly_scale(const PolyC& f, const CRat& c) {
    if (c.is_zero()) return {};
    PolyC r = f;
    for (auto& x : r) x = cq_mul(x, c);
    return r;
}

PolyC poly_pow(const PolyC& f, unsigned long e) {
    PolyC acc = poly_one();
    PolyC base = f;
    while (e > 0) {
        if (e & 1) acc = poly_mul(acc, base);
        base = poly_mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::pair<PolyC, PolyC> poly_divmod(const PolyC& f, const PolyC& g) {
    if (g.empty()) fail(Err::ZeroDivisor, "polynomial division by zero");
    PolyC r = f;
    if (r.size() < g.size()) return {{}, r};
    PolyC q(r.size() - g.size() + 1);
    const CRat lead = g.back();
    for (long i = static_cast<long>(r.size()) - 1; i >= static_cast<long>(g.size()) - 1; --i) {
        if (r[i].is_zero()) continue;
        CRat c = cq_div(r[i], lead);
        const size_t shift = i - (g.size() - 1);
        q[shift] = c;
        for (size_t j = 0; j < g.size(); ++j)
            r[shift + j] = cq_sub(r[shift + j], cq_mul(c, g[j]));
    }
    return {poly_trim(std::move(q)), poly_trim(std::move(r))};
}

std::optional<PolyC> poly_div_exact(const PolyC& f, const PolyC& g) {
    auto [q, r] = poly_divmod(f, g);
    if (!r.empty()) return std::nullopt;
    return q;
}

CRat poly_eval(const PolyC& f, const CRat& z) {
    CRat acc;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = cq_add(cq_mul(acc, z), *it);
    return acc;
}

PolyC poly_derivative(const PolyC& f) {
    if (f.size() <= 1) return {};
    PolyC r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = cq_mul(f[i], CRat(Rat(static_cast<long>(i))));
    return poly_trim(std::move(r));
}

static PolyC poly_monic(PolyC f) {
    if (f.empty()) return f;
    const CRat lead = f.back();
    for (auto& c : f) c = cq_div(c, lead);
    return f;
}

PolyC poly_gcd(PolyC f, PolyC g) {
    while (!g.empty()) {
        auto [q, r] = poly_divmod(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return poly_monic(std::move(f));
}

PolyExtGcd poly_ext_gcd(const PolyC& f, const PolyC& h) {
    PolyC r0 = f, r1 = h;
    PolyC u0 = poly_one(), u1 = {};
    PolyC v0 = {}, v1 = poly_one();
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        PolyC u2 = poly_sub(u0, poly_mul(q, u1));
        PolyC v2 = poly_sub(v0, poly_mul(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.empty()) {
        const CRat lead = r0.back();
        r0 = poly_monic(std::move(r0));
        u0 = poly_scale(u0, cq_div(CRat(Rat(1)), lead));
        v0 = poly_scale(v0, cq_div(CRat(Rat(1)), lead));
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

PolyC poly_linear_power(const CRat& root, unsigned long mult) {
    PolyC lin = poly_trim({cq_neg(root), CRat(Rat(1))});
    return poly_pow(lin, mult);
}

CRat poly_taylor_coeff(const PolyC& f, const CRat& z0, unsigned long k) {
    // Evaluate the k-th derivative at z0 and divide by k!.
    PolyC d = f;
    for (unsigned long i = 0; i < k; ++i) d = poly_derivative(d);
    CRat v = poly_eval(d, z0);
    return cq_mul(v, CRat(make_rat(Int(1), factorial(k))));
}

}  // namespace crat
