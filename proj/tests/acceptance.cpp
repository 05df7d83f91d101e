// Acceptance suite: one line per criterion, exact tolerances, enforced
// runtime budgets. Exits nonzero if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <numeric>
#include <thread>

#include "crat/hyperspace.hpp"
#include "crat/interp.hpp"
#include "crat/jobs.hpp"
#include "crat/runge.hpp"
#include "crat/solver.hpp"
#include "oracles.hpp"

using namespace crat;
using crat::jobs::json;

namespace {

std::string g_cli_path;

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void ack(bool cond, const std::string& msg) {
    if (!cond) throw Failure(msg);
}

const RingContext kZ3 = RingContext::padic(Int(3));
const RingContext kDisk = RingContext::poly(Rat(1));

PrincipalIdeal zi(const RingContext& ctx, long g) { return PrincipalIdeal::integers(ctx, Int(g)); }
Element ze(const RingContext& ctx, long n) { return make_int_element(ctx, Int(n)); }

// --------------------------------------------------------------------------
// 1. Classical CRT recovery

void criterion_1() {
    RingContext z7 = RingContext::padic(Int(7));
    ResidueSystem sys{z7, padic_valuation(z7),
                      {{zi(z7, 3), ze(z7, 2)}, {zi(z7, 5), ze(z7, 3)}, {zi(z7, 7), ze(z7, 2)}},
                      Rat(0)};
    Certificate cert = finite_crat(sys);
    Int m;
    mpz_mod(m.get_mpz_t(), cert.solution.as_int().get_mpz_t(), Int(105).get_mpz_t());
    ack(m == 23, "(3,5,7 | 2,3,2) must land in the class of 23 mod 105");
    for (const auto& r : cert.residuals) ack(r.bound == 0, "residuals must be exactly 0");

    std::vector<std::array<long, 3>> triples;
    for (long a = 1; a <= 15; ++a)
        for (long b = a + 1; b <= 15; ++b)
            for (long c = b + 1; c <= 15; ++c)
                if (std::gcd(a, b) == 1 && std::gcd(a, c) == 1 && std::gcd(b, c) == 1)
                    triples.push_back({a, b, c});

    auto sweep = [&](size_t offset, size_t stride) -> std::string {
        for (size_t t = offset; t < triples.size(); t += stride) {
            const auto [a, b, c] = triples[t];
            const long prod = a * b * c;
            // One brute-force pass tabulates the class of every tuple.
            std::vector<long> table(prod);
            for (long x = 0; x < prod; ++x) table[((x % a) * b + x % b) * c + x % c] = x;
            for (long r1 = 0; r1 < a; ++r1)
                for (long r2 = 0; r2 < b; ++r2)
                    for (long r3 = 0; r3 < c; ++r3) {
                        ResidueSystem s{z7, sys.valuation,
                                        {{zi(z7, a), ze(z7, r1)},
                                         {zi(z7, b), ze(z7, r2)},
                                         {zi(z7, c), ze(z7, r3)}},
                                        Rat(0)};
                        Certificate ct = finite_crat(s);
                        const long x = table[(r1 * b + r2) * c + r3];
                        Int diff = ct.solution.as_int() - Int(x);
                        if (!mpz_divisible_p(diff.get_mpz_t(), Int(prod).get_mpz_t()))
                            return "solver disagrees with the residue scan";
                        for (const auto& r : ct.residuals)
                            if (r.bound != 0) return "exact mode left a nonzero residual";
                    }
        }
        return "";
    };

    std::string err = sweep(0, 1);
    ack(err.empty(), err);
}

// --------------------------------------------------------------------------
// 2. Densification rate

void criterion_2() {
    PrincipalIdeal I = zi(kZ3, 2);
    Rat eps = make_rat(Int(1), pow_int(Int(3), 21));
    DensifyResult res = densify(I, ze(kZ3, 4), ze(kZ3, 1), eps);
    ack(res.delta == Rat(1, 3), "contraction rate must be exactly 1/3");
    const long prefix[] = {0, 4, -8, 28, -80};
    ack(res.iterates.size() >= 21, "need iterates up to n = 20");
    for (size_t n = 0; n < 5; ++n)
        ack(res.iterates[n] == ze(kZ3, prefix[n]), "iterate prefix mismatch at n=" + std::to_string(n));
    PseudoValuation V = padic_valuation(kZ3);
    for (size_t n = 0; n <= 20; ++n) {
        Rat vn = V.evaluate(elem_sub(ze(kZ3, 1), res.iterates[n]));
        ack(vn <= make_rat(Int(1), pow_int(Int(3), n)),
            "V3(r - r_n) must be <= 3^-n at n=" + std::to_string(n));
    }
}

// --------------------------------------------------------------------------
// 3. Example 3.2 characterization

void criterion_3() {
    for (long p : {2L, 3L, 5L}) {
        RingContext ctx = RingContext::padic(Int(p));
        for (long a = 1; a <= 50; ++a)
            for (long b = 1; b <= 50; ++b) {
                bool got = padic_tcm(PrincipalIdeal::integers(ctx, Int(a)),
                                     PrincipalIdeal::integers(ctx, Int(b)));
                bool expect = oracles::one_in_closure_scan(a, b, p, 8);
                ack(got == expect, "padic_tcm disagrees with the closure oracle at (a=" +
                                       std::to_string(a) + ", b=" + std::to_string(b) +
                                       ", p=" + std::to_string(p) + ")");
            }
    }
}

// --------------------------------------------------------------------------
// 4. Lagrange over Z[sqrt2]

void criterion_4() {
    LagrangeProblem worked{{Quad{Int(0), Int(0)}, Quad{Int(3), Int(0)}},
                           {Quad{Int(1), Int(0)}, Quad{Int(0), Int(0)}},
                           Rat(1, 100)};
    LagrangeResult res = lagrange_dense(worked);
    Quad r0 = quad_sub(qpoly_eval(res.polynomial, Quad{Int(0), Int(0)}), Quad{Int(1), Int(0)});
    ack(r0 == Quad{Int(-577), Int(408)}, "worked residual element at 0 mismatch");
    // |408 sqrt2 - 577| is about 8.67e-4: pin it inside (8.6e-4, 8.8e-4).
    QuadQ abs0 = qq_abs(QuadQ(r0));
    ack(qq_cmp(abs0, QuadQ{make_rat(Int(86), Int(100000)), Rat(0)}) > 0 &&
            qq_cmp(abs0, QuadQ{make_rat(Int(88), Int(100000)), Rat(0)}) < 0,
        "worked residual must be ~8.7e-4");
    Quad r3 = quad_sub(qpoly_eval(res.polynomial, Quad{Int(3), Int(0)}), Quad{Int(0), Int(0)});
    ack(r3.is_zero(), "residual at 3 must be exactly zero");

    const Rat eps = make_rat(Int(1), pow_int(Int(10), 6));
    auto g = oracles::rng(2024);
    for (int t = 0; t < 5; ++t) {
        std::vector<Quad> points, values;
        while (points.size() < 4) {
            Quad p{Int(oracles::rand_in(g, -10, 10)), Int(0)};
            bool dup = false;
            for (const auto& q : points) dup = dup || q == p;
            if (!dup) points.push_back(p);
        }
        for (int i = 0; i < 4; ++i) values.push_back(Quad{Int(oracles::rand_in(g, -10, 10)), Int(0)});
        LagrangeResult lr = lagrange_dense({points, values, eps});
        for (size_t i = 0; i < points.size(); ++i) {
            ack(lr.residuals[i].bound < eps, "certified residual must be below 1e-6");
            Quad r = quad_sub(qpoly_eval(lr.polynomial, points[i]), values[i]);
            RealBound recheck = qq_abs_bound(QuadQ(r), 640);  // 10x the working precision
            ack(recheck.hi < eps, "10x-precision recheck must stay below 1e-6");
        }
    }
}

// --------------------------------------------------------------------------
// 5. Hermite jets

void criterion_5() {
    JetProblem classic;
    classic.points = {CRat(Rat(0)), CRat(Rat(1))};
    classic.orders = {1, 1};
    classic.jets = {{CRat(Rat(0)), CRat(Rat(0))}, {CRat(Rat(1)), CRat(Rat(0))}};
    PolyC f = hermite_jets(classic);
    ack(f == PolyC{CRat(), CRat(), CRat(Rat(3)), CRat(Rat(-2))}, "classic problem must give 3z^2-2z^3");

    auto g = oracles::rng(2025);
    for (int t = 0; t < 20; ++t) {
        JetProblem prob;
        unsigned long total = 0;
        int npts = oracles::rand_in(g, 1, 3);
        for (int i = 0; i < npts && total < 8; ++i) {
            CRat p{oracles::rand_rat(g, 5, 3), oracles::rand_rat(g, 5, 3)};
            bool dup = false;
            for (const auto& q : prob.points) dup = dup || q == p;
            if (dup) continue;
            unsigned long m = oracles::rand_in(g, 0, 2);
            if (total + m + 1 > 8) m = 0;
            prob.points.push_back(p);
            prob.orders.push_back(m);
            total += m + 1;
        }
        prob.jets.clear();
        for (auto m : prob.orders) {
            std::vector<CRat> row;
            for (unsigned long k = 0; k <= m; ++k)
                row.push_back({oracles::rand_rat(g, 7, 4), oracles::rand_rat(g, 7, 4)});
            prob.jets.push_back(std::move(row));
        }
        PolyC ours = hermite_jets(prob);
        PolyC oracle = oracles::confluent_vandermonde_solve(prob.points, prob.orders, prob.jets);
        ack(ours == oracle, "hermite_jets must equal the confluent Vandermonde solve exactly");
    }
}

// --------------------------------------------------------------------------
// 6. Hyperspace lattice and entourage

void criterion_6() {
    for (long a = 1; a <= 100; ++a)
        for (long b = 1; b <= 100; ++b) {
            ack(ideal_add(zi(kZ3, a), zi(kZ3, b)) == zi(kZ3, std::gcd(a, b)), "join != gcd");
            ack(ideal_meet(zi(kZ3, a), zi(kZ3, b)) == zi(kZ3, std::lcm(a, b)), "meet != lcm");
        }

    for (long p : {2L, 3L}) {
        RingContext ctx = RingContext::padic(Int(p));
        PseudoValuation V = padic_valuation(ctx);
        for (unsigned m = 1; m <= 5; ++m) {
            Rat eps = make_rat(Int(3), Int(2) * pow_int(Int(p), m));
            for (long a = 0; a <= 30; ++a)
                for (long b = 0; b <= 30; ++b) {
                    bool fwd = oracles::covers_residue_scan(a, b, p, m);
                    bool bwd = oracles::covers_residue_scan(b, a, p, m);
                    Verdict got = entourage(PrincipalIdeal::integers(ctx, Int(a)),
                                            PrincipalIdeal::integers(ctx, Int(b)), V, eps)
                                      .verdict;
                    ack(got == ((fwd && bwd) ? Verdict::Yes : Verdict::No),
                        "entourage disagrees with the residue-scan oracle");
                }
        }
    }

    PseudoValuation V = padic_valuation(kZ3);
    auto g = oracles::rng(2026);
    std::vector<JoinContinuityCase> cases;
    for (int t = 0; t < 1000; ++t)
        cases.push_back({zi(kZ3, oracles::rand_in(g, 1, 100)), zi(kZ3, oracles::rand_in(g, 1, 100)),
                         zi(kZ3, oracles::rand_in(g, 1, 100)), zi(kZ3, oracles::rand_in(g, 1, 100))});
    for (const Rat& eps : {Rat(1), Rat(1, 3), Rat(1, 9)}) {
        JoinContinuityReport rep = join_continuity_test(cases, V, eps);
        ack(rep.violations.empty(), "join continuity violated");
    }
}

// --------------------------------------------------------------------------
// 7. Monotone net limits

void criterion_7() {
    NetSpec powers;
    Int p3(1);
    for (unsigned n = 0; n <= 16; ++n) {
        powers.chain.push_back(PrincipalIdeal::integers(kZ3, p3));
        p3 *= 3;
    }
    powers.limit = zi(kZ3, 0);
    NetResult conv = monotone_limit_check(powers);
    ack(conv.kind == NetKind::ConvergesToIntersection, "3^n chain must converge to {0}");
    for (size_t n = 0; n < conv.gaps.size(); ++n)
        ack(conv.gaps[n] == make_rat(Int(1), pow_int(Int(3), n)), "gap must be exactly 3^-n");

    NetSpec twos;
    Int p2(1);
    for (unsigned n = 0; n <= 16; ++n) {
        twos.chain.push_back(PrincipalIdeal::integers(kZ3, p2));
        p2 *= 2;
    }
    twos.limit = zi(kZ3, 0);
    NetResult stuck = monotone_limit_check(twos);
    ack(stuck.kind == NetKind::CauchyNotConvergent, "2^n chain must be Cauchy-not-convergent");
    ack(stuck.floor_bound == 1, "floor gap must be exactly 1");
    for (const auto& gp : stuck.gaps) ack(gp == 1, "every index must report gap 1");
}

// --------------------------------------------------------------------------
// 8. Density of far ideals

void criterion_8() {
    RungeResult r = runge_disk_densify(poly_one(), CRat(Rat(2)), 1, Rat(1), Rat(1, 100));
    ack(r.degree <= 8, "certificate must succeed at degree <= 8");
    ack(r.bound == make_rat(Int(3), Int(512)), "certified bound must be exactly 3*2^-9");

    PrincipalIdeal I = PrincipalIdeal::poly_from_factors(kDisk, {{CRat(Rat(2)), 1}});
    PolyDensityCert cert = ideal_density_certificate(I, Rat(1, 100));
    ack(cert.bound == make_rat(Int(3), Int(512)), "ideal certificate carries the same bound");
    ack(I.contains(cert.a), "certificate element must lie in the ideal");

    Rat prev(1);
    for (long z = 2; z <= 10; ++z) {
        Rat b = runge_tail_bound(poly_one(), CRat(Rat(z)), 1, Rat(1), 8);
        ack(b < prev, "certified bounds must decrease in |z_n| at fixed degree");
        prev = b;
    }
}

// --------------------------------------------------------------------------
// 9. Non-convergence demo

void criterion_9() {
    DivergenceDemo demo = ideal_power_divergence_demo(CRat(Rat(0)), kDisk, 10);
    ack(demo.rho == 1, "inner radius at the center must be 1");
    for (const auto& row : demo.rows) ack(row.lower_bound == 1, "lower bound must be 1 for all n");

    PseudoValuation V = disk_seminorm(kDisk);
    auto g = oracles::rng(2027);
    for (unsigned long n = 0; n <= 10; ++n) {
        PolyC zn = poly_linear_power(CRat(Rat(0)), n);
        PolyC zn1 = poly_linear_power(CRat(Rat(0)), n + 1);
        for (int t = 0; t < 100; ++t) {
            long maxdeg = 20 - static_cast<long>(n) - 1;
            PolyC q(oracles::rand_in(g, 0, maxdeg) + 1);
            for (auto& c : q) c = CRat(oracles::rand_rat(g, 20, 7));
            PolyC h = poly_mul(zn1, poly_trim(std::move(q)));
            Rat dist = *V.exact_value(make_poly_element(kDisk, poly_sub(zn, h)));
            ack(dist >= 1, "a sampled member of I^(n+1) broke the certified floor");
        }
    }
}

// --------------------------------------------------------------------------
// 10. Finite-exception CRAT

void criterion_10() {
    PseudoValuation V = disk_seminorm(kDisk);
    PrincipalIdeal at0 = PrincipalIdeal::poly_from_factors(kDisk, {{CRat(Rat(0)), 1}});
    PrincipalIdeal at5 = PrincipalIdeal::poly_from_factors(kDisk, {{CRat(Rat(5)), 1}});
    PrincipalIdeal at7 = PrincipalIdeal::poly_from_factors(kDisk, {{CRat(Rat(7)), 1}});

    ReduceResult red = reduce_family({at0, at5, at7}, Rat(1, 100), V);
    ack(red.exceptional.size() == 1 && red.exceptional[0] == at0,
        "exceptional set must be exactly {<z>}");

    ResidueSystem sys{kDisk, V,
                      {{at0, one(kDisk)}, {at5, zero(kDisk)}, {at7, zero(kDisk)}},
                      Rat(1, 100)};
    Certificate cert = crat_infinite(sys);
    check_certificate(sys, cert);
    for (size_t k = 0; k < sys.entries.size(); ++k) {
        const Residual& r = cert.residuals[k];
        ack(r.bound < Rat(1, 100), "residual bound must be below 1e-2");
        // Independent recomputation of the claimed valuation.
        Element small = elem_sub(elem_sub(cert.solution, sys.entries[k].target), r.witness);
        ack(V.compare(small, r.bound) <= 0, "recomputed residual exceeded its bound");
        ack(r.ideal.contains(r.witness), "witness must be divisible by the generator");
    }
}

// --------------------------------------------------------------------------
// 11. End-to-end audit

json crt_spec_357() {
    return {{"command", "crt"},
            {"ring", {{"kind", "padic"}, {"p", 7}}},
            {"payload",
             {{"entries",
               {{{"ideal", 3}, {"target", 2}}, {{"ideal", 5}, {"target", 3}},
                {{"ideal", 7}, {"target", 2}}}},
              {"epsilon", "0"}}}};
}

json poly_crt_spec() {
    auto root = [](long z) {
        return json{{"factors", {{{"root", std::to_string(z)}, {"mult", 1}}}}};
    };
    return {{"command", "crt"},
            {"ring", {{"kind", "poly"}, {"R", "1"}}},
            {"payload",
             {{"entries",
               {{{"ideal", root(0)}, {"target", {"1"}}},
                {{"ideal", root(5)}, {"target", json::array()}},
                {{"ideal", root(7)}, {"target", json::array()}}}},
              {"epsilon", "1/100"}}}};
}

bool cli_verify(const json& doc, int expect_exit) {
    if (g_cli_path.empty()) return true;  // library-level verify still runs
    namespace fs = std::filesystem;
    static int counter = 0;
    fs::path p = fs::temp_directory_path() / ("crat_acc_" + std::to_string(counter++) + ".json");
    std::ofstream(p) << doc.dump();
    std::string cmd = g_cli_path + " verify --input " + p.string() + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    fs::remove(p);
    return WEXITSTATUS(status) == expect_exit;
}

void criterion_11() {
    std::vector<json> outputs;
    outputs.push_back(jobs::run(crt_spec_357()));
    outputs.push_back(jobs::run({{"command", "densify-demo"},
                                 {"ring", {{"kind", "padic"}, {"p", 3}}},
                                 {"payload", {{"ideal", 2}, {"a", 4}, {"r", 1}, {"epsilon", "1/27"}}}}));
    outputs.push_back(jobs::run({{"command", "tcm-check"},
                                 {"ring", {{"kind", "padic"}, {"p", 3}}},
                                 {"payload", {{"a", 3}, {"b", 9}}}}));
    outputs.push_back(jobs::run({{"command", "interp-lagrange"},
                                 {"ring", {{"kind", "quad"}}},
                                 {"payload",
                                  {{"points", {{{"a", 0}, {"b", 0}}, {{"a", 3}, {"b", 0}}}},
                                   {"values", {{{"a", 1}, {"b", 0}}, {{"a", 0}, {"b", 0}}}},
                                   {"epsilon", "1/100"}}}}));
    outputs.push_back(jobs::run(
        {{"command", "interp-hermite"},
         {"ring", {{"kind", "poly"}, {"R", "1"}}},
         {"payload",
          {{"points", {"0", "1"}},
           {"orders", {1, 1}},
           {"jets", json::array({json::array({"0", "0"}), json::array({"1", "0"})})}}}}));
    outputs.push_back(jobs::run({{"command", "hyper-gap"},
                                 {"ring", {{"kind", "padic"}, {"p", 3}}},
                                 {"payload", {{"a", 3}, {"b", 9}}}}));
    outputs.push_back(jobs::run({{"command", "hyper-net"},
                                 {"ring", {{"kind", "padic"}, {"p", 3}}},
                                 {"payload", {{"chain", {1, 3, 9, 27, 81}}, {"limit", 0}}}}));
    outputs.push_back(jobs::run(poly_crt_spec()));
    outputs.push_back(jobs::run({{"command", "divergence-demo"},
                                 {"ring", {{"kind", "poly"}, {"R", "1"}}},
                                 {"payload", {{"z0", "0"}, {"n_max", 10}}}}));

    for (size_t i = 0; i < outputs.size(); ++i) {
        std::string why;
        ack(jobs::verify(outputs[i], kDefaultDegreeBudget, &why),
            "fresh output " + std::to_string(i) + " failed verification: " + why);
        ack(cli_verify(outputs[i], 0), "crat verify rejected a fresh output");
    }

    // Catalog of single-field tamperings; each must be caught.
    using Mutator = std::function<void(json&)>;
    std::vector<std::pair<size_t, Mutator>> catalog = {
        {0, [](json& d) { d["result"]["certificate"]["solution"] = 24; }},
        {0, [](json& d) { d["result"]["certificate"]["residuals"][0]["bound"] = "-1/2"; }},
        {0, [](json& d) { d["result"]["certificate"]["residuals"][0]["bound"] = "1/1000"; }},
        {0, [](json& d) { d["result"]["certificate"]["residuals"][1]["witness"] = 1; }},
        {0, [](json& d) { d["result"]["certificate"]["epsilon"] = "1/2"; }},
        {1, [](json& d) { d["result"]["iterates"][2] = -7; }},
        {1, [](json& d) { d["result"]["n0"] = 3; }},
        {1, [](json& d) { d["result"]["achieved"] = "1/243"; }},
        {1, [](json& d) { d["result"]["result"] = -79; }},
        {2, [](json& d) { d["result"]["tcm"] = true; }},
        {3, [](json& d) { d["result"]["polynomial"][1]["a"] = 191; }},
        {3, [](json& d) { d["result"]["residuals"][0]["bound"] = "1/1"; }},
        {4, [](json& d) { d["result"]["polynomial"][2]["re"] = "4/1"; }},
        {5, [](json& d) { d["result"]["gap"] = "1/9"; }},
        {6, [](json& d) { d["result"]["classification"] = "stalls"; }},
        {6, [](json& d) { d["result"]["gaps"][2] = "1/3"; }},
        {7, [](json& d) { d["result"]["certificate"]["residuals"][1]["bound"] = "2/1"; }},
        {7, [](json& d) { d["result"]["certificate"]["solution"][0]["re"] = "2/1"; }},
        {8, [](json& d) { d["result"]["rho"] = "2/1"; }},
        {8, [](json& d) { d["result"]["rows"][3]["lower_bound"] = "1/2"; }},
    };

    auto g = oracles::rng(2028);
    int caught = 0;
    for (int t = 0; t < 20; ++t) {
        const auto& [idx, mutate] = catalog[oracles::rand_in(g, 0, catalog.size() - 1)];
        json tampered = outputs[idx];
        mutate(tampered);
        if (tampered == outputs[idx]) continue;  // mutation was a no-op; still count below
        std::string why;
        ack(!jobs::verify(tampered, kDefaultDegreeBudget, &why),
            "tampering " + std::to_string(t) + " on output " + std::to_string(idx) +
                " slipped past verification");
        ack(cli_verify(tampered, 4), "crat verify must exit 4 on tampered input");
        ++caught;
    }
    ack(caught == 20, "all 20 tamperings must be exercised");
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<void()> body;
};

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];

    const std::vector<Criterion> criteria = {
        {1, "classical CRT recovery", 1.0, criterion_1},
        {2, "densification rate", 1.0, criterion_2},
        {3, "p-adic TCM characterization", 10.0, criterion_3},
        {4, "Lagrange over Z[sqrt2]", 5.0, criterion_4},
        {5, "Hermite jets", 5.0, criterion_5},
        {6, "hyperspace lattice and entourage", 30.0, criterion_6},
        {7, "monotone net limits", 5.0, criterion_7},
        {8, "density of far ideals", 5.0, criterion_8},
        {9, "non-convergence demo", 30.0, criterion_9},
        {10, "finite-exception CRAT", 10.0, criterion_10},
        {11, "end-to-end audit", 60.0, criterion_11},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            c.body();
        } catch (const std::exception& e) {
            error = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (error.empty() && secs > c.limit_seconds)
            error = "runtime " + std::to_string(secs) + "s exceeded the " +
                    std::to_string(c.limit_seconds) + "s budget";
        if (error.empty()) {
            std::printf("PASS  criterion %2d  %-38s (%.2fs)\n", c.id, c.name, secs);
        } else {
            std::printf("FAIL  criterion %2d  %-38s (%.2fs): %s\n", c.id, c.name, secs,
                        error.c_str());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
