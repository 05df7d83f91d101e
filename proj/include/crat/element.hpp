#pragma once

#include <memory>
#include <string>
#include <variant>

#include "crat/polyq.hpp"
#include "crat/sqrt2.hpp"

namespace crat {

enum class RingKind { PadicInt, QuadInt, Poly };

/// Descriptor of a concrete ring instance, carried by every element so
/// cross-ring misuse is detected at the operation boundary. Parameters live
/// behind a shared pointer: contexts copy without allocating.
struct RingContext {
    struct Params {
        Int prime;   // PadicInt only
        Rat radius;  // Poly only: closed disk |z| <= radius
    };

    RingKind kind = RingKind::PadicInt;
    std::shared_ptr<const Params> params;

    const Int& prime() const { return params->prime; }
    const Rat& radius() const { return params->radius; }

    bool operator==(const RingContext& o) const;
    std::string label() const;

    static RingContext padic(const Int& p);  // p must be prime
    static RingContext quad();
    static RingContext poly(const Rat& R);  // R must be positive
};

/// Exact ring element: big integer, quadratic integer, or polynomial,
/// depending on the owning context. Immutable value semantics throughout.
struct Element {
    RingContext ring;
    std::variant<Int, Quad, PolyC> payload;

    bool operator==(const Element&) const = default;

    const Int& as_int() const;
    const Quad& as_quad() const;
    const PolyC& as_poly() const;
    bool is_zero() const;
};

Element make_int_element(const RingContext& ctx, Int v);
Element make_quad_element(const RingContext& ctx, Quad v);
Element make_poly_element(const RingContext& ctx, PolyC v);

Element zero(const RingContext& ctx);
Element one(const RingContext& ctx);

void require_same_ring(const Element& x, const Element& y);
void require_ring(const Element& x, const RingContext& ctx);

Element elem_add(const Element& x, const Element& y);
Element elem_sub(const Element& x, const Element& y);
Element elem_mul(const Element& x, const Element& y);
Element elem_neg(const Element& x);

std::string elem_to_string(const Element& x);

}  // namespace crat
