#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crat/error.hpp"
#include "crat/valuation.hpp"
#include "oracles.hpp"

using namespace crat;

namespace {

const RingContext kZ3 = RingContext::padic(Int(3));
const RingContext kQuad = RingContext::quad();
const RingContext kDisk1 = RingContext::poly(Rat(1));

Element z3(long n) { return make_int_element(kZ3, Int(n)); }

std::vector<std::pair<Element, Element>> random_padic_pairs(size_t count, unsigned long seed) {
    auto g = oracles::rng(seed);
    std::vector<std::pair<Element, Element>> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i)
        out.emplace_back(z3(oracles::rand_in(g, -100000, 100000)),
                         z3(oracles::rand_in(g, -100000, 100000)));
    return out;
}

std::vector<std::pair<Element, Element>> random_quad_pairs(size_t count, unsigned long seed) {
    auto g = oracles::rng(seed);
    std::vector<std::pair<Element, Element>> out;
    for (size_t i = 0; i < count; ++i)
        out.emplace_back(
            make_quad_element(kQuad, Quad{Int(oracles::rand_in(g, -500, 500)),
                                          Int(oracles::rand_in(g, -500, 500))}),
            make_quad_element(kQuad, Quad{Int(oracles::rand_in(g, -500, 500)),
                                          Int(oracles::rand_in(g, -500, 500))}));
    return out;
}

PolyC random_poly(std::mt19937_64& g, int maxdeg) {
    PolyC p(oracles::rand_in(g, 0, maxdeg) + 1);
    for (auto& c : p) c = CRat{oracles::rand_rat(g, 8, 4), oracles::rand_rat(g, 8, 4)};
    return poly_trim(std::move(p));
}

std::vector<std::pair<Element, Element>> random_poly_pairs(const RingContext& ctx, size_t count,
                                                           unsigned long seed) {
    auto g = oracles::rng(seed);
    std::vector<std::pair<Element, Element>> out;
    for (size_t i = 0; i < count; ++i)
        out.emplace_back(make_poly_element(ctx, random_poly(g, 4)),
                         make_poly_element(ctx, random_poly(g, 4)));
    return out;
}

// Deliberately broken "valuation" with V(0) = 1, for the axiom harness.
class BrokenValuation final : public ValuationImpl {
  public:
    std::string id() const override { return "broken"; }
    const RingContext& ring() const override { return kZ3; }
    std::optional<Rat> exact_value(const Element&) const override { return Rat(1); }
    RealBound bound(const Element&, unsigned) const override { return RealBound::point(Rat(1)); }
};

}  // namespace

TEST_CASE("p-adic valuation values") {
    PseudoValuation V = padic_valuation(kZ3);
    CHECK(V.evaluate(z3(27)) == make_rat(Int(1), Int(27)));
    CHECK(V.evaluate(z3(3)) == make_rat(Int(1), Int(3)));
    CHECK(V.evaluate(z3(0)) == 0);
    CHECK(V.evaluate(z3(5)) == 1);
    CHECK(V.evaluate(z3(-81)) == make_rat(Int(1), Int(81)));
}

TEST_CASE("ball membership is strict and exact") {
    PseudoValuation V = padic_valuation(kZ3);
    Ball b{V, z3(0), make_rat(Int(1), Int(9))};
    CHECK(ball_contains(b, z3(27)));       // V = 1/27 < 1/9
    CHECK(!ball_contains(b, z3(3)));       // V = 1/3
    CHECK(!ball_contains(b, z3(9)));       // V = 1/9, strict
    CHECK(ball_contains(b, b.center));     // V(0) = 0

    Ball off{V, z3(5), Rat(1, 3)};
    CHECK(ball_contains(off, z3(14)));     // V(9) = 1/9 < 1/3
    CHECK(!ball_contains(off, z3(6)));     // V(1) = 1

    Element wrong = make_quad_element(kQuad, Quad{Int(1), Int(0)});
    CHECK_THROWS_AS(ball_contains(b, wrong), CratError);
}

TEST_CASE("ball membership is monotone in the radius") {
    PseudoValuation V = padic_valuation(kZ3);
    auto g = oracles::rng(31);
    for (int t = 0; t < 500; ++t) {
        Element x = z3(oracles::rand_in(g, -10000, 10000));
        Rat e1 = make_rat(Int(1), pow_int(Int(3), oracles::rand_in(g, 0, 6)));
        Rat e2 = e1 * oracles::rand_in(g, 2, 9);
        if (ball_contains(Ball{V, z3(0), e1}, x)) CHECK(ball_contains(Ball{V, z3(0), e2}, x));
    }
}

TEST_CASE("axiom check passes 10^4 random pairs for every shipped valuation") {
    CHECK(pv_axiom_check(padic_valuation(kZ3), random_padic_pairs(10000, 1)).empty());
    CHECK(pv_axiom_check(quad_abs_valuation(kQuad), random_quad_pairs(10000, 2)).empty());
    CHECK(pv_axiom_check(disk_seminorm(kDisk1), random_poly_pairs(kDisk1, 10000, 3)).empty());
    const RingContext wide = RingContext::poly(Rat(7, 2));
    CHECK(pv_axiom_check(disk_seminorm(wide), random_poly_pairs(wide, 2000, 4)).empty());
}

TEST_CASE("axiom check on the degenerate pair (0,0)") {
    PseudoValuation V = padic_valuation(kZ3);
    CHECK(pv_axiom_check(V, {{z3(0), z3(0)}}).empty());
}

TEST_CASE("broken valuation is reported on axiom 4") {
    PseudoValuation broken{std::make_shared<BrokenValuation>()};
    auto report = pv_axiom_check(broken, {{z3(0), z3(0)}});
    REQUIRE(!report.empty());
    CHECK(report.front().axiom == 4);
}

TEST_CASE("axiom check rejects samples from another ring") {
    PseudoValuation V = padic_valuation(kZ3);
    Element alien = make_int_element(RingContext::padic(Int(5)), Int(1));
    CHECK_THROWS_AS(pv_axiom_check(V, {{alien, alien}}), CratError);
}

TEST_CASE("ball arithmetic inclusions") {
    PseudoValuation v3 = padic_valuation(kZ3);
    // Premise fails for the pair (3, 6) at radius 1/3 (strict balls): vacuous.
    CHECK(ball_arithmetic_check(v3, Rat(1, 3), Rat(1, 3), {{z3(3), z3(6)}}).empty());
    CHECK(ball_arithmetic_check(v3, Rat(1), Rat(1), {{z3(0), z3(0)}}).empty());

    // Genuinely inside pairs.
    CHECK(ball_arithmetic_check(v3, Rat(1, 2), Rat(1, 2), {{z3(9), z3(27)}, {z3(3), z3(3)}})
              .empty());

    PseudoValuation vd = disk_seminorm(kDisk1);
    Element f = make_poly_element(kDisk1, {CRat(Rat(1)), CRat(Rat(1))});    // 1 + z
    Element h = make_poly_element(kDisk1, {CRat(Rat(1)), CRat(Rat(-1))});   // 1 - z
    CHECK(ball_arithmetic_check(vd, Rat(2), Rat(2), {{f, h}}).empty());
    CHECK(ball_arithmetic_check(vd, Rat(3), Rat(3), {{f, h}}).empty());  // premises hold here

    auto g = oracles::rng(17);
    for (int t = 0; t < 50; ++t) {
        auto samples = random_padic_pairs(20, 100 + t);
        Rat eps = make_rat(Int(1), pow_int(Int(3), oracles::rand_in(g, 0, 4)));
        Rat delta = make_rat(Int(1), pow_int(Int(3), oracles::rand_in(g, 0, 4)));
        CHECK(ball_arithmetic_check(v3, eps, delta, samples).empty());
    }
}

TEST_CASE("disk seminorm examples") {
    CHECK(poly_seminorm({}, Rat(1)) == 0);
    CHECK(poly_seminorm({CRat(Rat(1)), CRat(Rat(1))}, Rat(1)) == 2);          // 1 + z at R=1
    CHECK(poly_seminorm({CRat(), CRat(), CRat(Rat(3))}, Rat(2)) == 12);       // 3 z^2 at R=2
    // V(1) = 1 for every disk radius.
    CHECK(poly_seminorm(poly_one(), Rat(7, 3)) == 1);
}

TEST_CASE("quad valuation comparisons are decided exactly") {
    PseudoValuation V = quad_abs_valuation(kQuad);
    // |577 - 408 sqrt2| = (sqrt2-1)^8 ~ 8.67e-4: between 1/1154 and 1/1153.
    Element x = make_quad_element(kQuad, Quad{Int(577), Int(-408)});
    CHECK(V.compare(x, make_rat(Int(1), Int(1153))) < 0);
    CHECK(V.compare(x, make_rat(Int(1), Int(1154))) > 0);
    CHECK(V.evaluate(make_quad_element(kQuad, Quad{Int(-7), Int(0)})) == 7);
}
