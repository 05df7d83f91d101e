#include "crat/element.hpp"

#include "crat/error.hpp"

namespace crat {

bool RingContext::operator==(const RingContext& o) const {
    if (kind != o.kind) return false;
    if (params == o.params) return true;
    switch (kind) {
        case RingKind::PadicInt: return prime() == o.prime();
        case RingKind::QuadInt: return true;
        case RingKind::Poly: return radius() == o.radius();
    }
    return false;
}

std::string RingContext::label() const {
    switch (kind) {
        case RingKind::PadicInt: return "padic-" + prime().get_str();
        case RingKind::QuadInt: return "quad";
        case RingKind::Poly: return "poly-" + rat_to_string(radius());
    }
    return "?";
}

RingContext RingContext::padic(const Int& p) {
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
        fail(Err::Schema, "p-adic context needs a prime, got " + p.get_str());
    RingContext c;
    c.kind = RingKind::PadicInt;
    c.params = std::make_shared<const Params>(Params{p, Rat(0)});
    return c;
}

RingContext RingContext::quad() {
    RingContext c;
    c.kind = RingKind::QuadInt;
    c.params = std::make_shared<const Params>();
    return c;
}

RingContext RingContext::poly(const Rat& R) {
    if (R <= 0) fail(Err::Schema, "poly context needs a positive radius");
    RingContext c;
    c.kind = RingKind::Poly;
    c.params = std::make_shared<const Params>(Params{Int(0), R});
    return c;
}

const Int& Element::as_int() const {
    if (!std::holds_alternative<Int>(payload)) fail(Err::Internal, "payload is not an integer");
    return std::get<Int>(payload);
}

const Quad& Element::as_quad() const {
    if (!std::holds_alternative<Quad>(payload)) fail(Err::Internal, "payload is not quadratic");
    return std::get<Quad>(payload);
}

const PolyC& Element::as_poly() const {
    if (!std::holds_alternative<PolyC>(payload)) fail(Err::Internal, "payload is not a polynomial");
    return std::get<PolyC>(payload);
}

bool Element::is_zero() const {
    switch (ring.kind) {
        case RingKind::PadicInt: return as_int() == 0;
        case RingKind::QuadInt: return as_quad().is_zero();
        case RingKind::Poly: return as_poly().empty();
    }
    return false;
}

Element make_int_element(const RingContext& ctx, Int v) {
    if (ctx.kind != RingKind::PadicInt) fail(Err::WrongRing, "integer payload in " + ctx.label());
    return Element{ctx, std::move(v)};
}

Element make_quad_element(const RingContext& ctx, Quad v) {
    if (ctx.kind != RingKind::QuadInt) fail(Err::WrongRing, "quadratic payload in " + ctx.label());
    return Element{ctx, std::move(v)};
}

Element make_poly_element(const RingContext& ctx, PolyC v) {
    if (ctx.kind != RingKind::Poly) fail(Err::WrongRing, "polynomial payload in " + ctx.label());
    return Element{ctx, poly_trim(std::move(v))};
}

Element zero(const RingContext& ctx) {
    switch (ctx.kind) {
        case RingKind::PadicInt: return Element{ctx, Int(0)};
        case RingKind::QuadInt: return Element{ctx, Quad{}};
        case RingKind::Poly: return Element{ctx, PolyC{}};
    }
    fail(Err::Internal, "unreachable");
}

Element one(const RingContext& ctx) {
    switch (ctx.kind) {
        case RingKind::PadicInt: return Element{ctx, Int(1)};
        case RingKind::QuadInt: return Element{ctx, Quad{Int(1), Int(0)}};
        case RingKind::Poly: return Element{ctx, poly_one()};
    }
    fail(Err::Internal, "unreachable");
}

void require_same_ring(const Element& x, const Element& y) {
    if (!(x.ring == y.ring))
        fail(Err::MixedRings, x.ring.label() + " vs " + y.ring.label());
}

void require_ring(const Element& x, const RingContext& ctx) {
    if (!(x.ring == ctx)) fail(Err::MixedRings, x.ring.label() + " vs " + ctx.label());
}

Element elem_add(const Element& x, const Element& y) {
    require_same_ring(x, y);
    switch (x.ring.kind) {
        case RingKind::PadicInt: return Element{x.ring, Int(x.as_int() + y.as_int())};
        case RingKind::QuadInt: return Element{x.ring, quad_add(x.as_quad(), y.as_quad())};
        case RingKind::Poly: return Element{x.ring, poly_add(x.as_poly(), y.as_poly())};
    }
    fail(Err::Internal, "unreachable");
}

Element elem_sub(const Element& x, const Element& y) {
    require_same_ring(x, y);
    switch (x.ring.kind) {
        case RingKind::PadicInt: return Element{x.ring, Int(x.as_int() - y.as_int())};
        case RingKind::QuadInt: return Element{x.ring, quad_sub(x.as_quad(), y.as_quad())};
        case RingKind::Poly: return Element{x.ring, poly_sub(x.as_poly(), y.as_poly())};
    }
    fail(Err::Internal, "unreachable");
}

Element elem_mul(const Element& x, const Element& y) {
    require_same_ring(x, y);
    switch (x.ring.kind) {
        case RingKind::PadicInt: return Element{x.ring, Int(x.as_int() * y.as_int())};
        case RingKind::QuadInt: return Element{x.ring, quad_mul(x.as_quad(), y.as_quad())};
        case RingKind::Poly: return Element{x.ring, poly_mul(x.as_poly(), y.as_poly())};
    }
    fail(Err::Internal, "unreachable");
}

Element elem_neg(const Element& x) {
    switch (x.ring.kind) {
        case RingKind::PadicInt: return Element{x.ring, Int(-x.as_int())};
        case RingKind::QuadInt: return Element{x.ring, quad_neg(x.as_quad())};
        case RingKind::Poly: return Element{x.ring, poly_neg(x.as_poly())};
    }
    fail(Err::Internal, "unreachable");
}

static std::string crat_to_string(const CRat& c) {
    if (c.im == 0) return rat_to_string(c.re);
    return "(" + rat_to_string(c.re) + "+" + rat_to_string(c.im) + "i)";
}

std::string elem_to_string(const Element& x) {
    switch (x.ring.kind) {
        case RingKind::PadicInt: return x.as_int().get_str();
        case RingKind::QuadInt: {
            const Quad& q = x.as_quad();
            return q.a.get_str() + (q.b >= 0 ? "+" : "") + q.b.get_str() + "*sqrt2";
        }
        case RingKind::Poly: {
            const PolyC& p = x.as_poly();
            if (p.empty()) return "0";
            std::string s;
            for (size_t i = 0; i < p.size(); ++i) {
                if (p[i].is_zero()) continue;
                if (!s.empty()) s += " + ";
                s += crat_to_string(p[i]) + "*z^" + std::to_string(i);
            }
            return s;
        }
    }
    return "?";
}

}  // namespace crat
