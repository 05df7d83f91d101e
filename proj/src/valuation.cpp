#include "crat/valuation.hpp"

#include "crat/error.hpp"

namespace crat {

namespace {
constexpr unsigned kDefaultPrec = 64;
constexpr unsigned kMaxPrec = 1u << 14;
}  // namespace

int ValuationImpl::compare(const Element& x, const Rat& threshold) const {
    for (unsigned prec = 32;; prec *= 2) {
        RealBound b = bound(x, prec);
        if (b.exact()) return b.lo < threshold ? -1 : (b.lo > threshold ? 1 : 0);
        if (b.hi < threshold) return -1;
        if (b.lo > threshold) return 1;
        if (prec > kMaxPrec)
            fail(Err::Internal, "valuation comparison did not converge (value equals threshold?)");
    }
}

Rat PseudoValuation::evaluate(const Element& x) const {
    if (auto e = exact_value(x)) return *e;
    return bound(x, kDefaultPrec).hi;
}

Rat PseudoValuation::upper(const Element& x, unsigned prec_bits) const {
    return bound(x, prec_bits).hi;
}

Rat PseudoValuation::lower(const Element& x, unsigned prec_bits) const {
    return bound(x, prec_bits).lo;
}

Rat PseudoValuation::upper_below(const Element& x, const Rat& below) const {
    for (unsigned prec = kDefaultPrec;; prec *= 2) {
        RealBound b = bound(x, prec);
        if (b.hi < below) return b.hi;
        if (b.lo >= below)
            fail(Err::ToleranceViolation,
                 "value " + rat_to_string(b.lo) + "..-- not below " + rat_to_string(below));
        if (prec > kMaxPrec) fail(Err::Internal, "upper_below did not converge");
    }
}

unsigned long padic_exponent(const Int& n, const Int& p) {
    if (n == 0) fail(Err::Internal, "p-adic exponent of zero");
    Int reduced;
    return mpz_remove(reduced.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

Rat padic_value(const Int& n, const Int& p) {
    if (n == 0) return Rat(0);
    return make_rat(Int(1), pow_int(p, padic_exponent(n, p)));
}

unsigned long padic_ball_exponent(const Int& p, const Rat& eps) {
    if (eps <= 0) fail(Err::Schema, "ball radius must be positive");
    unsigned long m = 0;
    Rat val(1);
    while (!(val < eps)) {
        val /= p;
        ++m;
    }
    return m;
}

RealBound poly_seminorm_bound(const PolyC& f, const Rat& R, unsigned prec_bits) {
    RealBound acc = RealBound::point(Rat(0));
    Rat rk(1);
    for (const CRat& c : f) {
        if (!c.is_zero()) acc = rb_add(acc, rb_scale(cq_abs_bound(c, prec_bits), rk));
        rk *= R;
    }
    return acc;
}

Rat poly_seminorm(const PolyC& f, const Rat& R) {
    RealBound b = poly_seminorm_bound(f, R, kDefaultPrec);
    return b.hi;
}

namespace {

class PadicValuation final : public ValuationImpl {
  public:
    explicit PadicValuation(RingContext ctx) : ctx_(std::move(ctx)) {}
    std::string id() const override { return ctx_.label(); }
    const RingContext& ring() const override { return ctx_; }

    std::optional<Rat> exact_value(const Element& x) const override {
        require_ring(x, ctx_);
        return padic_value(x.as_int(), ctx_.prime());
    }
    RealBound bound(const Element& x, unsigned) const override {
        return RealBound::point(*exact_value(x));
    }
    int compare(const Element& x, const Rat& t) const override {
        Rat v = *exact_value(x);
        return v < t ? -1 : (v > t ? 1 : 0);
    }

  private:
    RingContext ctx_;
};

class QuadAbsValuation final : public ValuationImpl {
  public:
    explicit QuadAbsValuation(RingContext ctx) : ctx_(std::move(ctx)) {}
    std::string id() const override { return "quad-abs"; }
    const RingContext& ring() const override { return ctx_; }

    std::optional<Rat> exact_value(const Element& x) const override {
        require_ring(x, ctx_);
        const Quad& q = x.as_quad();
        if (q.b == 0) return Rat(int_abs(q.a));
        return std::nullopt;
    }
    RealBound bound(const Element& x, unsigned prec) const override {
        require_ring(x, ctx_);
        return qq_abs_bound(QuadQ(x.as_quad()), prec);
    }
    int compare(const Element& x, const Rat& t) const override {
        require_ring(x, ctx_);
        // |a + b sqrt2| vs t, decided by exact sign analysis.
        return qq_cmp(qq_abs(QuadQ(x.as_quad())), QuadQ{t, Rat(0)});
    }

  private:
    RingContext ctx_;
};

class DiskSeminorm final : public ValuationImpl {
  public:
    explicit DiskSeminorm(RingContext ctx) : ctx_(std::move(ctx)) {}
    std::string id() const override { return "disk-l1-" + rat_to_string(ctx_.radius()); }
    const RingContext& ring() const override { return ctx_; }

    std::optional<Rat> exact_value(const Element& x) const override {
        require_ring(x, ctx_);
        Rat acc(0);
        Rat rk(1);
        for (const CRat& c : x.as_poly()) {
            if (!c.is_zero()) {
                auto a = cq_abs_exact(c);
                if (!a) return std::nullopt;
                acc += *a * rk;
            }
            rk *= ctx_.radius();
        }
        return acc;
    }
    RealBound bound(const Element& x, unsigned prec) const override {
        require_ring(x, ctx_);
        return poly_seminorm_bound(x.as_poly(), ctx_.radius(), prec);
    }

  private:
    RingContext ctx_;
};

}  // namespace

PseudoValuation padic_valuation(const RingContext& ctx) {
    if (ctx.kind != RingKind::PadicInt) fail(Err::WrongRing, "padic valuation on " + ctx.label());
    return PseudoValuation(std::make_shared<PadicValuation>(ctx));
}

PseudoValuation quad_abs_valuation(const RingContext& ctx) {
    if (ctx.kind != RingKind::QuadInt) fail(Err::WrongRing, "quad valuation on " + ctx.label());
    return PseudoValuation(std::make_shared<QuadAbsValuation>(ctx));
}

PseudoValuation disk_seminorm(const RingContext& ctx) {
    if (ctx.kind != RingKind::Poly) fail(Err::WrongRing, "disk seminorm on " + ctx.label());
    return PseudoValuation(std::make_shared<DiskSeminorm>(ctx));
}

PseudoValuation valuation_for(const RingContext& ctx) {
    switch (ctx.kind) {
        case RingKind::PadicInt: return padic_valuation(ctx);
        case RingKind::QuadInt: return quad_abs_valuation(ctx);
        case RingKind::Poly: return disk_seminorm(ctx);
    }
    fail(Err::Internal, "unreachable");
}

bool ball_contains(const Ball& b, const Element& x) {
    if (b.radius <= 0) fail(Err::Schema, "ball radius must be positive");
    require_same_ring(b.center, x);
    require_ring(x, b.valuation.ring());
    return b.valuation.less_than(elem_sub(x, b.center), b.radius);
}

std::vector<AxiomViolation> pv_axiom_check(const PseudoValuation& V,
                                           const std::vector<std::pair<Element, Element>>& samples) {
    std::vector<AxiomViolation> out;
    const RingContext& ctx = V.ring();

    RealBound v0 = V.bound(zero(ctx), kDefaultPrec);
    if (v0.lo > 0)
        out.push_back({4, 0, "V(0) >= " + rat_to_string(v0.lo)});

    for (size_t i = 0; i < samples.size(); ++i) {
        const auto& [x, y] = samples[i];
        require_ring(x, ctx);
        require_ring(y, ctx);
        RealBound vx = V.bound(x, kDefaultPrec);
        RealBound vy = V.bound(y, kDefaultPrec);

        RealBound vsum = V.bound(elem_add(x, y), kDefaultPrec);
        if (vsum.lo > vx.hi + vy.hi)
            out.push_back({1, i,
                           "V(x+y) >= " + rat_to_string(vsum.lo) + " > V(x)+V(y) <= " +
                               rat_to_string(Rat(vx.hi + vy.hi))});

        RealBound vprod = V.bound(elem_mul(x, y), kDefaultPrec);
        if (vprod.lo > vx.hi * vy.hi)
            out.push_back({2, i,
                           "V(xy) >= " + rat_to_string(vprod.lo) + " > V(x)V(y) <= " +
                               rat_to_string(Rat(vx.hi * vy.hi))});

        RealBound vnx = V.bound(elem_neg(x), kDefaultPrec);
        if (vnx.lo > vx.hi || vx.lo > vnx.hi)
            out.push_back({3, i, "V(-x) != V(x) certified"});
        RealBound vny = V.bound(elem_neg(y), kDefaultPrec);
        if (vny.lo > vy.hi || vy.lo > vny.hi)
            out.push_back({3, i, "V(-y) != V(y) certified"});
    }
    return out;
}

std::vector<BallInclusionViolation> ball_arithmetic_check(
    const PseudoValuation& V, const Rat& eps, const Rat& delta,
    const std::vector<std::pair<Element, Element>>& samples) {
    if (eps <= 0 || delta <= 0) fail(Err::Schema, "ball radii must be positive");
    std::vector<BallInclusionViolation> out;
    for (size_t i = 0; i < samples.size(); ++i) {
        const auto& [x, y] = samples[i];
        require_ring(x, V.ring());
        require_ring(y, V.ring());
        if (!V.less_than(x, eps) || !V.less_than(y, delta)) continue;  // vacuous
        if (!V.less_than(elem_add(x, y), Rat(eps + delta)))
            out.push_back({i, "x+y escaped B(eps+delta)"});
        if (!V.less_than(elem_mul(x, y), Rat(eps * delta)))
            out.push_back({i, "xy escaped B(eps*delta)"});
    }
    return out;
}

}  // namespace crat
