#include "crat/jobs.hpp"

#include "crat/error.hpp"

namespace crat::jobs {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(Err::Schema, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

unsigned long parse_uint(const json& j) {
    if (j.is_number_unsigned()) return j.get<unsigned long>();
    if (j.is_number_integer() && j.get<long>() >= 0) return static_cast<unsigned long>(j.get<long>());
    bad("expected a nonnegative integer");
}

}  // namespace

json rat_json(const Rat& q) { return rat_to_string(q); }

Rat parse_rat(const json& j) {
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long>()));
    bad("expected a rational as \"num/den\" or an integer");
}

json int_json(const Int& n) {
    if (n.fits_slong_p()) return static_cast<long>(n.get_si());
    return n.get_str();
}

Int parse_int(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<long>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            bad("bad integer literal '" + j.get<std::string>() + "'");
        }
    }
    bad("expected an integer (number or string)");
}

json crat_json(const CRat& c) { return {{"re", rat_json(c.re)}, {"im", rat_json(c.im)}}; }

CRat parse_crat(const json& j) {
    if (j.is_object()) {
        CRat c;
        c.re = parse_rat(field(j, "re"));
        if (j.contains("im")) c.im = parse_rat(j.at("im"));
        return c;
    }
    return CRat(parse_rat(j));  // bare rational means a real value
}

json ring_json(const RingContext& ctx) {
    switch (ctx.kind) {
        case RingKind::PadicInt: return {{"kind", "padic"}, {"p", int_json(ctx.prime())}};
        case RingKind::QuadInt: return {{"kind", "quad"}};
        case RingKind::Poly: return {{"kind", "poly"}, {"R", rat_json(ctx.radius())}};
    }
    fail(Err::Internal, "unreachable");
}

RingContext parse_ring(const json& j) {
    const std::string kind = field(j, "kind").is_string() ? j.at("kind").get<std::string>()
                                                          : throw CratError(Err::Schema, "ring kind");
    if (kind == "padic") return RingContext::padic(parse_int(field(j, "p")));
    if (kind == "quad") return RingContext::quad();
    if (kind == "poly") return RingContext::poly(parse_rat(field(j, "R")));
    bad("unknown ring kind '" + kind + "'");
}

json element_json(const Element& e) {
    switch (e.ring.kind) {
        case RingKind::PadicInt: return int_json(e.as_int());
        case RingKind::QuadInt:
            return {{"a", int_json(e.as_quad().a)}, {"b", int_json(e.as_quad().b)}};
        case RingKind::Poly: {
            json arr = json::array();
            for (const CRat& c : e.as_poly()) arr.push_back(crat_json(c));
            return arr;
        }
    }
    fail(Err::Internal, "unreachable");
}

Element parse_element(const RingContext& ctx, const json& j) {
    switch (ctx.kind) {
        case RingKind::PadicInt: return make_int_element(ctx, parse_int(j));
        case RingKind::QuadInt: {
            if (!j.is_object()) bad("quadratic element must be {\"a\",\"b\"}");
            return make_quad_element(ctx, Quad{parse_int(field(j, "a")), parse_int(field(j, "b"))});
        }
        case RingKind::Poly: {
            if (!j.is_array()) bad("polynomial element must be a coefficient array");
            PolyC p;
            for (const auto& c : j) p.push_back(parse_crat(c));
            return make_poly_element(ctx, std::move(p));
        }
    }
    fail(Err::Internal, "unreachable");
}

json ideal_json(const PrincipalIdeal& I) {
    switch (I.ring.kind) {
        case RingKind::PadicInt:
        case RingKind::QuadInt: return element_json(I.generator);
        case RingKind::Poly: {
            json out;
            out["generator"] = element_json(I.generator);
            if (I.factors) {
                json fs = json::array();
                for (const auto& f : *I.factors)
                    fs.push_back({{"root", crat_json(f.root)}, {"mult", f.mult}});
                out["factors"] = fs;
            }
            return out;
        }
    }
    fail(Err::Internal, "unreachable");
}

PrincipalIdeal parse_ideal(const RingContext& ctx, const json& j) {
    switch (ctx.kind) {
        case RingKind::PadicInt: return PrincipalIdeal::integers(ctx, parse_int(j));
        case RingKind::QuadInt:
            return PrincipalIdeal::quadratic(
                ctx, Quad{parse_int(field(j, "a")), parse_int(field(j, "b"))});
        case RingKind::Poly: {
            if (!j.is_object() || !j.contains("factors"))
                bad("poly ideal needs a factored form {\"factors\": [...]}");
            std::vector<LinearFactor> fs;
            for (const auto& f : j.at("factors"))
                fs.push_back({parse_crat(field(f, "root")), parse_uint(field(f, "mult"))});
            return PrincipalIdeal::poly_from_factors(ctx, std::move(fs));
        }
    }
    fail(Err::Internal, "unreachable");
}

json certificate_json(const Certificate& cert) {
    json residuals = json::array();
    for (const auto& r : cert.residuals)
        residuals.push_back({{"ideal", ideal_json(r.ideal)},
                             {"bound", rat_json(r.bound)},
                             {"witness", element_json(r.witness)}});
    return {{"solution", element_json(cert.solution)},
            {"epsilon", rat_json(cert.epsilon)},
            {"valuation", cert.valuation_id},
            {"residuals", residuals}};
}

namespace {

ResidueSystem parse_system(const RingContext& ctx, const json& payload) {
    const json& entries = field(payload, "entries");
    if (!entries.is_array() || entries.empty()) bad("entries must be a nonempty array");
    ResidueSystem sys{ctx, valuation_for(ctx), {}, parse_rat(field(payload, "epsilon"))};
    for (const auto& e : entries)
        sys.entries.push_back(
            {parse_ideal(ctx, field(e, "ideal")), parse_element(ctx, field(e, "target"))});
    return sys;
}

json echo_system(const ResidueSystem& sys) {
    json entries = json::array();
    for (const auto& e : sys.entries)
        entries.push_back({{"ideal", ideal_json(e.ideal)}, {"target", element_json(e.target)}});
    return {{"entries", entries}, {"epsilon", rat_json(sys.epsilon)}};
}

Certificate parse_certificate(const RingContext& ctx, const json& j) {
    Certificate cert;
    cert.solution = parse_element(ctx, field(j, "solution"));
    cert.epsilon = parse_rat(field(j, "epsilon"));
    cert.valuation_id = field(j, "valuation").get<std::string>();
    for (const auto& r : field(j, "residuals")) {
        Rat bound = parse_rat(field(r, "bound"));
        if (bound < 0) bad("negative residual bound");
        cert.residuals.push_back({parse_ideal(ctx, field(r, "ideal")), std::move(bound),
                                  parse_element(ctx, field(r, "witness"))});
    }
    return cert;
}

json run_crt(const RingContext& ctx, const json& payload, unsigned long budget, json& echo) {
    ResidueSystem sys = parse_system(ctx, payload);
    echo = echo_system(sys);
    Certificate cert = sys.epsilon == 0 ? finite_crat(sys, budget) : crat_infinite(sys, budget);
    return {{"certificate", certificate_json(cert)}};
}

json run_tcm(const RingContext& ctx, const json& payload, json& echo) {
    PrincipalIdeal a = parse_ideal(ctx, field(payload, "a"));
    PrincipalIdeal b = parse_ideal(ctx, field(payload, "b"));
    echo = {{"a", ideal_json(a)}, {"b", ideal_json(b)}};
    return {{"tcm", tcm_decide(a, b)}};
}

LagrangeProblem parse_lagrange(const RingContext& ctx, const json& payload) {
    if (ctx.kind != RingKind::QuadInt) bad("lagrange jobs run in the quad ring");
    LagrangeProblem prob;
    for (const auto& p : field(payload, "points"))
        prob.points.push_back(parse_element(ctx, p).as_quad());
    for (const auto& v : field(payload, "values"))
        prob.values.push_back(parse_element(ctx, v).as_quad());
    prob.epsilon = parse_rat(field(payload, "epsilon"));
    return prob;
}

json quad_json(const Quad& q) { return {{"a", int_json(q.a)}, {"b", int_json(q.b)}}; }

json run_lagrange(const RingContext& ctx, const json& payload, json& echo) {
    LagrangeProblem prob = parse_lagrange(ctx, payload);
    json pts = json::array(), vals = json::array();
    for (const auto& p : prob.points) pts.push_back(quad_json(p));
    for (const auto& v : prob.values) vals.push_back(quad_json(v));
    echo = {{"points", pts}, {"values", vals}, {"epsilon", rat_json(prob.epsilon)}};

    LagrangeResult res = lagrange_dense(prob);
    json poly = json::array();
    for (const auto& c : res.polynomial) poly.push_back(quad_json(c));
    json residuals = json::array();
    for (const auto& r : res.residuals)
        residuals.push_back({{"index", r.index}, {"bound", rat_json(r.bound)}});
    return {{"polynomial", poly}, {"residuals", residuals}};
}

JetProblem parse_jets(const json& payload) {
    JetProblem prob;
    for (const auto& p : field(payload, "points")) prob.points.push_back(parse_crat(p));
    for (const auto& m : field(payload, "orders")) prob.orders.push_back(parse_uint(m));
    for (const auto& row : field(payload, "jets")) {
        std::vector<CRat> jets;
        for (const auto& w : row) jets.push_back(parse_crat(w));
        prob.jets.push_back(std::move(jets));
    }
    return prob;
}

json run_hermite(const json& payload, json& echo) {
    JetProblem prob = parse_jets(payload);
    json pts = json::array(), orders = json::array(), jets = json::array();
    for (const auto& p : prob.points) pts.push_back(crat_json(p));
    for (auto m : prob.orders) orders.push_back(m);
    for (const auto& row : prob.jets) {
        json r = json::array();
        for (const auto& w : row) r.push_back(crat_json(w));
        jets.push_back(r);
    }
    echo = {{"points", pts}, {"orders", orders}, {"jets", jets}};

    PolyC f = hermite_jets(prob);
    json poly = json::array();
    for (const auto& c : f) poly.push_back(crat_json(c));
    return {{"polynomial", poly}};
}

json run_hyper_gap(const RingContext& ctx, const json& payload, json& echo) {
    PrincipalIdeal a = parse_ideal(ctx, field(payload, "a"));
    PrincipalIdeal b = parse_ideal(ctx, field(payload, "b"));
    echo = {{"a", ideal_json(a)}, {"b", ideal_json(b)}};
    return {{"gap", rat_json(padic_gap(a, b))}};
}

const char* net_kind_name(NetKind k) {
    switch (k) {
        case NetKind::ConvergesToIntersection: return "converges-to-intersection";
        case NetKind::Stalls: return "stalls";
        case NetKind::CauchyNotConvergent: return "cauchy-not-convergent";
    }
    return "?";
}

json run_hyper_net(const RingContext& ctx, const json& payload, json& echo) {
    NetSpec net;
    for (const auto& s : field(payload, "chain")) net.chain.push_back(parse_ideal(ctx, s));
    if (payload.contains("limit")) net.limit = parse_ideal(ctx, payload.at("limit"));
    json chain = json::array();
    for (const auto& s : net.chain) chain.push_back(ideal_json(s));
    echo = {{"chain", chain}};
    if (net.limit) echo["limit"] = ideal_json(*net.limit);

    NetResult res = monotone_limit_check(net);
    json gaps = json::array(), consecutive = json::array(), evidence = json::array();
    for (const auto& g : res.gaps) gaps.push_back(rat_json(g));
    for (const auto& c : res.consecutive) consecutive.push_back(rat_json(c));
    for (const auto& ev : res.evidence)
        evidence.push_back(
            {{"index", ev.index}, {"k", int_json(ev.k)}, {"valuation", rat_json(ev.valuation)}});
    return {{"classification", net_kind_name(res.kind)},
            {"limit", ideal_json(res.limit)},
            {"gaps", gaps},
            {"consecutive", consecutive},
            {"floor", rat_json(res.floor_bound)},
            {"evidence", evidence}};
}

json run_densify(const RingContext& ctx, const json& payload, json& echo) {
    PrincipalIdeal I = parse_ideal(ctx, field(payload, "ideal"));
    Element a = parse_element(ctx, field(payload, "a"));
    Element r = parse_element(ctx, field(payload, "r"));
    Rat eps = parse_rat(field(payload, "epsilon"));
    echo = {{"ideal", ideal_json(I)},
            {"a", element_json(a)},
            {"r", element_json(r)},
            {"epsilon", rat_json(eps)}};

    DensifyResult res = densify(I, a, r, eps);
    json iterates = json::array(), bounds = json::array();
    for (const auto& it : res.iterates) iterates.push_back(element_json(it));
    for (const auto& b : res.iterate_bounds) bounds.push_back(rat_json(b));
    return {{"result", element_json(res.result)},
            {"n0", res.n0},
            {"delta", rat_json(res.delta)},
            {"achieved", rat_json(res.achieved)},
            {"iterates", iterates},
            {"iterate_bounds", bounds}};
}

json run_divergence(const RingContext& ctx, const json& payload, json& echo) {
    CRat z0 = parse_crat(field(payload, "z0"));
    unsigned long n_max = parse_uint(field(payload, "n_max"));
    echo = {{"z0", crat_json(z0)}, {"n_max", n_max}};

    DivergenceDemo demo = ideal_power_divergence_demo(z0, ctx, n_max);
    json rows = json::array();
    for (const auto& row : demo.rows)
        rows.push_back({{"n", row.n}, {"lower_bound", rat_json(row.lower_bound)}});
    return {{"rho", rat_json(demo.rho)}, {"rows", rows}};
}

}  // namespace

json run(const json& spec, unsigned long degree_budget) {
    const std::string cmd = field(spec, "command").is_string()
                                ? spec.at("command").get<std::string>()
                                : throw CratError(Err::Schema, "command must be a string");
    RingContext ctx = parse_ring(field(spec, "ring"));
    const json& payload = field(spec, "payload");

    json echo;
    json result;
    if (cmd == "crt")
        result = run_crt(ctx, payload, degree_budget, echo);
    else if (cmd == "tcm-check")
        result = run_tcm(ctx, payload, echo);
    else if (cmd == "interp-lagrange")
        result = run_lagrange(ctx, payload, echo);
    else if (cmd == "interp-hermite")
        result = run_hermite(payload, echo);
    else if (cmd == "hyper-gap")
        result = run_hyper_gap(ctx, payload, echo);
    else if (cmd == "hyper-net")
        result = run_hyper_net(ctx, payload, echo);
    else if (cmd == "densify-demo")
        result = run_densify(ctx, payload, echo);
    else if (cmd == "divergence-demo")
        result = run_divergence(ctx, payload, echo);
    else
        bad("unknown command '" + cmd + "'");

    return {{"command", cmd}, {"ring", ring_json(ctx)}, {"input", echo}, {"result", result}};
}

namespace {

void check_crt_result(const RingContext& ctx, const json& input, const json& result) {
    ResidueSystem sys = parse_system(ctx, input);
    Certificate cert = parse_certificate(ctx, field(result, "certificate"));
    check_certificate(sys, cert);
}

void check_lagrange_result(const RingContext& ctx, const json& input, const json& result) {
    LagrangeProblem prob = parse_lagrange(ctx, input);
    PolyQuad p;
    for (const auto& c : field(result, "polynomial"))
        p.push_back(parse_element(ctx, c).as_quad());
    const json& residuals = field(result, "residuals");
    if (residuals.size() != prob.points.size())
        fail(Err::ToleranceViolation, "residual count mismatch");
    for (size_t i = 0; i < prob.points.size(); ++i) {
        Rat bound = parse_rat(field(residuals[i], "bound"));
        if (bound < 0 || !(bound < prob.epsilon))
            fail(Err::ToleranceViolation, "residual bound outside [0, epsilon)");
        Quad res = quad_sub(qpoly_eval(p, prob.points[i]), prob.values[i]);
        if (qq_cmp(qq_abs(QuadQ(res)), QuadQ{bound, Rat(0)}) > 0)
            fail(Err::ToleranceViolation, "recomputed residual exceeds recorded bound");
    }
}

void check_hermite_result(const json& input, const json& result) {
    JetProblem prob = parse_jets(input);
    PolyC f;
    for (const auto& c : field(result, "polynomial")) f.push_back(parse_crat(c));
    f = poly_trim(std::move(f));
    unsigned long total = 0;
    for (auto m : prob.orders) total += m + 1;
    if (!(f.size() <= total)) fail(Err::ToleranceViolation, "interpolant degree too high");
    for (size_t i = 0; i < prob.points.size(); ++i) {
        PolyC d = f;
        Rat k_fact(1);
        for (unsigned long k = 0; k <= prob.orders[i]; ++k) {
            if (k > 0) {
                d = poly_derivative(d);
                k_fact *= Rat(static_cast<long>(k));
            }
            if (!(poly_eval(d, prob.points[i]) == cq_mul(CRat(k_fact), prob.jets[i][k])))
                fail(Err::ToleranceViolation, "prescribed jet not matched");
        }
    }
}

void check_densify_result(const RingContext& ctx, const json& input, const json& result) {
    PrincipalIdeal I = parse_ideal(ctx, field(input, "ideal"));
    Element a = parse_element(ctx, field(input, "a"));
    Element r = parse_element(ctx, field(input, "r"));
    Rat eps = parse_rat(field(input, "epsilon"));
    const PseudoValuation V = valuation_for(ctx);

    const json& iterates = field(result, "iterates");
    const json& bounds = field(result, "iterate_bounds");
    if (iterates.empty() || iterates.size() != bounds.size())
        fail(Err::ToleranceViolation, "iterate/bound arrays malformed");
    Element cur = zero(ctx);
    for (size_t n = 0; n < iterates.size(); ++n) {
        Element claimed = parse_element(ctx, iterates[n]);
        if (!(claimed == cur)) fail(Err::ToleranceViolation, "iterate recurrence mismatch");
        Rat bound = parse_rat(bounds[n]);
        if (bound < 0) fail(Err::ToleranceViolation, "negative iterate bound");
        if (V.compare(elem_sub(r, cur), bound) > 0)
            fail(Err::ToleranceViolation, "iterate bound below its recomputed valuation");
        cur = elem_add(cur, elem_mul(elem_sub(r, cur), a));
    }
    Element last = parse_element(ctx, iterates[static_cast<size_t>(iterates.size()) - 1]);
    if (!(parse_element(ctx, field(result, "result")) == last))
        fail(Err::ToleranceViolation, "result is not the last iterate");
    if (!I.contains(last)) fail(Err::ToleranceViolation, "result escaped the ideal");
    Rat achieved = parse_rat(field(result, "achieved"));
    if (achieved < 0 || !(achieved < eps))
        fail(Err::ToleranceViolation, "achieved bound outside [0, epsilon)");
    if (V.compare(elem_sub(r, last), achieved) > 0)
        fail(Err::ToleranceViolation, "achieved bound below its recomputed valuation");
}

void check_divergence_result(const RingContext& ctx, const json& input, const json& result) {
    DivergenceDemo demo = ideal_power_divergence_demo(parse_crat(field(input, "z0")), ctx,
                                                      parse_uint(field(input, "n_max")));
    if (!(parse_rat(field(result, "rho")) == demo.rho))
        fail(Err::ToleranceViolation, "rho mismatch");
    const json& rows = field(result, "rows");
    if (rows.size() != demo.rows.size()) fail(Err::ToleranceViolation, "row count mismatch");
    for (size_t i = 0; i < rows.size(); ++i)
        if (!(parse_rat(field(rows[i], "lower_bound")) == demo.rows[i].lower_bound))
            fail(Err::ToleranceViolation, "lower bound mismatch");
}

}  // namespace

bool verify(const json& result, unsigned long degree_budget, std::string* why) {
    auto explain = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    try {
        const std::string cmd = field(result, "command").get<std::string>();
        RingContext ctx = parse_ring(field(result, "ring"));
        const json& input = field(result, "input");
        const json& res = field(result, "result");

        // Independent certificate audit: memberships and valuations from scratch.
        if (cmd == "crt")
            check_crt_result(ctx, input, res);
        else if (cmd == "interp-lagrange")
            check_lagrange_result(ctx, input, res);
        else if (cmd == "interp-hermite")
            check_hermite_result(input, res);
        else if (cmd == "densify-demo")
            check_densify_result(ctx, input, res);
        else if (cmd == "divergence-demo")
            check_divergence_result(ctx, input, res);
        // tcm-check / hyper-gap / hyper-net carry no extra certificate beyond
        // the deterministic reproduction below.

        json spec = {{"command", cmd}, {"ring", result.at("ring")}, {"payload", input}};
        json fresh = run(spec, degree_budget);
        if (fresh.at("result") != res) return explain("reproduction differs from recorded result");
        return true;
    } catch (const CratError& e) {
        return explain(e.what());
    } catch (const json::exception& e) {
        return explain(std::string("malformed result document: ") + e.what());
    }
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

}  // namespace crat::jobs
