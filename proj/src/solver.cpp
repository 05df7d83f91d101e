#include "crat/solver.hpp"

#include "crat/error.hpp"

namespace crat {

namespace {

/// Certified upper bound on V(x) not exceeding cap (which must dominate V(x)).
Rat upper_at_most(const PseudoValuation& V, const Element& x, const Rat& cap) {
    if (auto e = V.exact_value(x)) {
        if (*e > cap) fail(Err::Internal, "exact value exceeded its certified cap");
        return *e;
    }
    for (unsigned prec = 64;; prec *= 2) {
        RealBound b = V.bound(x, prec);
        if (b.hi <= cap) return b.hi;
        if (b.lo > cap) fail(Err::Internal, "value exceeded its certified cap");
        if (prec > (1u << 14)) return cap;
    }
}

Rat tight_upper(const PseudoValuation& V, const Element& x, const Rat& strictly_below) {
    if (auto e = V.exact_value(x)) {
        if (!(*e < strictly_below)) fail(Err::Internal, "value not below required tolerance");
        return *e;
    }
    return V.upper_below(x, strictly_below);
}

void validate_system(const ResidueSystem& sys) {
    if (sys.entries.empty()) fail(Err::EmptySystem, "residue system has no entries");
    if (sys.epsilon < 0) fail(Err::Schema, "epsilon must be nonnegative");
    if (!(sys.valuation.ring() == sys.ring)) fail(Err::MixedRings, "valuation ring mismatch");
    for (const auto& e : sys.entries) {
        if (!(e.ideal.ring == sys.ring)) fail(Err::MixedRings, "ideal outside the system ring");
        require_ring(e.target, sys.ring);
    }
    for (size_t i = 0; i < sys.entries.size(); ++i)
        for (size_t j = i + 1; j < sys.entries.size(); ++j)
            if (sys.entries[i].ideal == sys.entries[j].ideal)
                fail(Err::Schema, "ideals must be pairwise distinct");
}

bool witness_is_exact(const TCMWitness& w) {
    return w.bound == 0 && elem_sub(one(w.I.ring), elem_add(w.i, w.j)).is_zero();
}

}  // namespace

Certificate finite_crat(const ResidueSystem& sys, unsigned long degree_budget) {
    validate_system(sys);
    const PseudoValuation& V = sys.valuation;
    const size_t n = sys.entries.size();

    if (n == 1) {
        const auto& e = sys.entries[0];
        return {e.target, sys.epsilon, {{e.ideal, Rat(0), zero(sys.ring)}}, V.id()};
    }

    // Witness I_k against the meet of the others, then pull the target through.
    std::vector<TCMWitness> ws;
    ws.reserve(n);
    if (sys.epsilon == 0) {
        // Exact mode: the witness for (I_l, I_k) is the swap of (I_k, I_l),
        // so each unordered pair is searched once.
        std::vector<std::vector<std::optional<TCMWitness>>> cache(n);
        for (auto& row : cache) row.resize(n);
        std::optional<TCMWitness> swapped;
        auto pair_witness = [&](size_t k, size_t l) -> const TCMWitness& {
            const size_t lo = std::min(k, l), hi = std::max(k, l);
            auto& slot = cache[lo][hi];
            if (!slot)
                slot = tcm_witness(sys.entries[lo].ideal, sys.entries[hi].ideal, V, Rat(0),
                                   degree_budget);
            if (k == lo) return *slot;
            swapped.emplace(TCMWitness{slot->J, slot->I, slot->j, slot->i, slot->bound,
                                       slot->valuation});
            return *swapped;
        };
        for (size_t k = 0; k < n; ++k) {
            std::optional<TCMWitness> acc;
            std::optional<PrincipalIdeal> meet;
            for (size_t l = 0; l < n; ++l) {
                if (l == k) continue;
                const TCMWitness& w = pair_witness(k, l);
                acc = acc ? combine_witnesses_product(*acc, w) : w;
                if (sys.ring.kind != RingKind::QuadInt)
                    meet = meet ? ideal_meet(*meet, sys.entries[l].ideal) : sys.entries[l].ideal;
            }
            if (meet) {
                if (!meet->contains(acc->j)) fail(Err::Internal, "j-part escaped the meet");
                acc->J = std::move(*meet);
            }
            ws.push_back(std::move(*acc));
        }
    } else {
        for (size_t k = 0; k < n; ++k) {
            std::vector<PrincipalIdeal> others;
            others.reserve(n - 1);
            for (size_t l = 0; l < n; ++l)
                if (l != k) others.push_back(sys.entries[l].ideal);
            Rat scale = rat_max(Rat(1), V.upper(sys.entries[k].target));
            Rat eps_k = sys.epsilon / (Rat(static_cast<long>(n)) * scale);
            ws.push_back(intersection_witness(sys.entries[k].ideal, others, V, eps_k, degree_budget));
        }
    }

    std::vector<Element> b_parts;
    b_parts.reserve(n);
    for (size_t k = 0; k < n; ++k) b_parts.push_back(elem_mul(ws[k].j, sys.entries[k].target));

    Element r = zero(sys.ring);
    for (const auto& b : b_parts) r = elem_add(r, b);

    std::vector<Residual> residuals;
    residuals.reserve(n);
    for (size_t k = 0; k < n; ++k) {
        Element w = elem_neg(elem_mul(ws[k].i, sys.entries[k].target));
        for (size_t l = 0; l < n; ++l)
            if (l != k) w = elem_add(w, b_parts[l]);
        if (!sys.entries[k].ideal.contains(w)) fail(Err::Internal, "residual witness escaped its ideal");

        Element small = elem_sub(elem_sub(r, sys.entries[k].target), w);
        Rat bound(0);
        if (sys.epsilon == 0) {
            if (!small.is_zero()) fail(Err::Internal, "exact mode left a nonzero residual");
        } else {
            bound = small.is_zero() ? Rat(0) : tight_upper(V, small, sys.epsilon);
        }
        residuals.push_back({sys.entries[k].ideal, std::move(bound), std::move(w)});
    }
    return {std::move(r), sys.epsilon, std::move(residuals), V.id()};
}

void check_certificate(const ResidueSystem& sys, const Certificate& cert) {
    validate_system(sys);
    const PseudoValuation& V = sys.valuation;
    require_ring(cert.solution, sys.ring);
    if (cert.residuals.size() != sys.entries.size())
        fail(Err::ToleranceViolation, "certificate entry count mismatch");
    if (cert.epsilon != sys.epsilon) fail(Err::ToleranceViolation, "certificate epsilon mismatch");
    for (size_t k = 0; k < sys.entries.size(); ++k) {
        const Residual& res = cert.residuals[k];
        if (!(res.ideal == sys.entries[k].ideal))
            fail(Err::ToleranceViolation, "certificate ideal mismatch at entry " + std::to_string(k));
        if (res.bound < 0) fail(Err::ToleranceViolation, "negative residual bound");
        if (sys.epsilon == 0) {
            if (res.bound != 0) fail(Err::ToleranceViolation, "exact mode requires zero bounds");
        } else if (!(res.bound < sys.epsilon)) {
            fail(Err::ToleranceViolation, "residual bound not below epsilon");
        }
        if (!res.ideal.contains(res.witness))
            fail(Err::ToleranceViolation, "witness not divisible by the ideal generator");
        Element small = elem_sub(elem_sub(cert.solution, sys.entries[k].target), res.witness);
        if (V.compare(small, res.bound) > 0)
            fail(Err::ToleranceViolation, "recomputed residual valuation exceeds recorded bound");
    }
}

DensifyResult densify(const PrincipalIdeal& I, const Element& a, const Element& r, const Rat& eps) {
    if (eps <= 0) fail(Err::Schema, "tolerance must be positive");
    if (!I.contains(a)) fail(Err::Schema, "contraction element lies outside the ideal");
    require_ring(a, I.ring);
    require_ring(r, I.ring);
    const PseudoValuation V = valuation_for(I.ring);

    Element defect = elem_sub(one(I.ring), a);
    Rat delta(0);
    if (!defect.is_zero()) {
        if (V.compare(defect, Rat(1)) >= 0)
            fail(Err::NotContractive, "V(1 - a) >= 1: iteration does not contract");
        delta = tight_upper(V, defect, Rat(1));
    }

    Rat vr = V.exact_value(r) ? *V.exact_value(r) : V.upper(r);

    // A-priori count: least n with delta^n V(r) < eps (0^0 = 1).
    unsigned long n0 = 0;
    Rat cur = vr;
    while (!(cur < eps)) {
        cur *= delta;
        ++n0;
        if (n0 > 1000000) fail(Err::Internal, "densification count diverged");
    }

    DensifyResult out;
    out.delta = delta;
    out.n0 = n0;
    out.iterates.push_back(zero(I.ring));
    out.iterate_bounds.push_back(vr);

    Element r_n = zero(I.ring);
    Rat cap = vr;
    for (unsigned long nstep = 1; nstep <= n0; ++nstep) {
        r_n = elem_add(r_n, elem_mul(elem_sub(r, r_n), a));
        cap *= delta;
        Element diff = elem_sub(r, r_n);
        if (V.compare(diff, cap) > 0)
            fail(Err::Internal, "iterate escaped the geometric envelope");
        out.iterates.push_back(r_n);
        out.iterate_bounds.push_back(diff.is_zero() ? Rat(0) : upper_at_most(V, diff, cap));
        if (V.compare(diff, eps) < 0) break;  // ultrametric early exit
    }

    if (!I.contains(r_n)) fail(Err::Internal, "densified iterate escaped the ideal");
    Element diff = elem_sub(r, r_n);
    out.achieved = diff.is_zero() ? Rat(0) : tight_upper(V, diff, eps);
    out.result = std::move(r_n);
    return out;
}

MeetApprox comaximal_meet_approx(const Element& x, const TCMWitness& w, const Element& x_prime,
                                 const Rat& eps) {
    if (eps <= 0) fail(Err::Schema, "tolerance must be positive");
    if (!w.I.contains(x)) fail(Err::Schema, "x must lie in I");
    if (!w.J.contains(x_prime)) fail(Err::Schema, "x' must lie in J");
    const PseudoValuation& V = w.valuation;

    // V(1 - (a+b)) < eps / (2 V(x))  and  V(x - x') < eps / (2 V(a)).
    if (!x.is_zero()) {
        Rat thr = eps / (2 * V.upper(x));
        if (!(w.bound < thr))
            fail(Err::ToleranceViolation, "witness bound too loose for this x");
    }
    if (!w.i.is_zero()) {
        Rat thr = eps / (2 * V.upper(w.i));
        if (V.compare(elem_sub(x, x_prime), thr) >= 0)
            fail(Err::ToleranceViolation, "x' is not close enough to x");
    }

    Element y = elem_add(elem_mul(w.i, x_prime), elem_mul(w.j, x));
    if (!w.I.contains(y) || !w.J.contains(y)) fail(Err::Internal, "meet element escaped I or J");
    Element diff = elem_sub(x, y);
    Rat bound = diff.is_zero() ? Rat(0) : tight_upper(V, diff, eps);
    return {std::move(y), std::move(bound)};
}

Rat choose_delta(const Rat& eps, const TCMWitness& w) {
    if (eps <= 0) fail(Err::Schema, "tolerance must be positive");
    Rat va = rat_max(Rat(1), w.valuation.upper(w.i));
    return eps / (3 * va);
}

StabilityLift stability_lift(const TCMWitness& w, const Element& r, const Element& r1,
                             const Element& r2, const Rat& eps) {
    if (eps <= 0) fail(Err::Schema, "tolerance must be positive");
    if (!witness_is_exact(w)) fail(Err::InexactWitness, "stability lift needs a + b = 1 exactly");
    if (!w.I.contains(r1)) fail(Err::Schema, "r1 must lie in I");
    if (!w.J.contains(r2)) fail(Err::Schema, "r2 must lie in J");
    const PseudoValuation& V = w.valuation;

    const Rat delta = choose_delta(eps, w);
    if (V.compare(elem_sub(r, r1), delta) >= 0)
        fail(Err::ToleranceViolation, "r1 not within delta of r");
    if (V.compare(elem_sub(r, r2), delta) >= 0)
        fail(Err::ToleranceViolation, "r2 not within delta of r");

    Element y = elem_add(elem_mul(w.j, r1), elem_mul(w.i, r2));
    if (!w.I.contains(y) || !w.J.contains(y)) fail(Err::Internal, "lifted element escaped I meet J");
    Element diff = elem_sub(r, y);
    Rat bound = diff.is_zero() ? Rat(0) : tight_upper(V, diff, eps);
    return {std::move(y), std::move(bound)};
}

QuotientLift quotient_lift(const Element& x, const TCMWitness& w) {
    if (!witness_is_exact(w)) fail(Err::InexactWitness, "quotient lift needs a + b = 1 exactly");
    require_ring(x, w.I.ring);
    Element y = elem_mul(w.i, x);
    if (!w.I.contains(y)) fail(Err::Internal, "lift escaped I");
    if (!w.J.contains(elem_sub(y, x))) fail(Err::Internal, "lift changed the class mod J");
    const PseudoValuation& V = w.valuation;
    Rat norm_bound = V.upper(w.i) * V.upper(x);
    if (V.compare(y, norm_bound) > 0) fail(Err::Internal, "openness bound violated");
    return {std::move(y), std::move(norm_bound)};
}

ReduceResult reduce_family(const std::vector<PrincipalIdeal>& family, const Rat& eps,
                           const PseudoValuation& V, unsigned long degree_budget) {
    if (eps <= 0) fail(Err::Schema, "tolerance must be positive");
    ReduceResult out;
    for (const auto& I : family) {
        if (!(I.ring == V.ring())) fail(Err::MixedRings, "family member outside the valuation ring");
        if (auto cert = try_density_certificate(I, V, eps, degree_budget))
            out.certified.emplace_back(I, std::move(*cert));
        else
            out.exceptional.push_back(I);
    }

    // Reject families whose exceptional part is provably not pairwise TCM.
    const auto& ex = out.exceptional;
    if (!ex.empty() && ex[0].ring.kind == RingKind::PadicInt && ex.size() >= 2)
        fail(Err::NotTCM, "two ideals with p dividing both generators");
    if (!ex.empty() && ex[0].ring.kind == RingKind::Poly) {
        const Rat r2 = ex[0].ring.radius() * ex[0].ring.radius();
        for (size_t i = 0; i < ex.size(); ++i) {
            for (size_t j = i + 1; j < ex.size(); ++j) {
                if (ex[i].is_zero_ideal() || ex[j].is_zero_ideal())
                    fail(Err::NotTCM, "zero ideal paired with a non-dense ideal");
                for (const auto& f : *ex[i].factors)
                    if (factor_multiplicity(*ex[j].factors, f.root) > 0 && cq_norm2(f.root) <= r2)
                        fail(Err::NotTCM, "shared root inside the disk");
            }
        }
    }
    return out;
}

Certificate crat_infinite(const ResidueSystem& sys, unsigned long degree_budget) {
    validate_system(sys);
    if (sys.epsilon == 0) return finite_crat(sys, degree_budget);
    const PseudoValuation& V = sys.valuation;

    std::vector<PrincipalIdeal> family;
    family.reserve(sys.entries.size());
    for (const auto& e : sys.entries) family.push_back(e.ideal);
    ReduceResult red = reduce_family(family, sys.epsilon, V, degree_budget);

    auto is_exceptional = [&](const PrincipalIdeal& I) {
        for (const auto& e : red.exceptional)
            if (e == I) return true;
        return false;
    };

    Element r = zero(sys.ring);
    std::vector<Residual> exceptional_residuals;
    if (red.exceptional.empty()) {
        r = sys.entries[0].target;
    } else {
        ResidueSystem sub{sys.ring, V, {}, sys.epsilon};
        for (const auto& e : sys.entries)
            if (is_exceptional(e.ideal)) sub.entries.push_back(e);
        Certificate inner = finite_crat(sub, degree_budget);
        r = inner.solution;
        exceptional_residuals = std::move(inner.residuals);
    }

    std::vector<Residual> residuals;
    residuals.reserve(sys.entries.size());
    size_t ex_idx = 0;
    for (const auto& e : sys.entries) {
        if (is_exceptional(e.ideal)) {
            residuals.push_back(std::move(exceptional_residuals[ex_idx++]));
            continue;
        }
        Element diff = elem_sub(r, e.target);
        if (diff.is_zero()) {
            residuals.push_back({e.ideal, Rat(0), zero(sys.ring)});
            continue;
        }
        // R = I + eps certificates force r + I into target + I + eps: the
        // witness is diff * a with a the tailored density certificate.
        Rat vd = rat_max(Rat(1), V.upper(diff));
        auto cert = try_density_certificate(e.ideal, V, Rat(sys.epsilon / (2 * vd)), degree_budget);
        if (!cert) fail(Err::Internal, "classified-dense ideal lost its certificate");
        Element w = elem_mul(diff, cert->a);
        if (!e.ideal.contains(w)) fail(Err::Internal, "density witness escaped its ideal");
        Element small = elem_sub(diff, w);
        Rat bound = small.is_zero() ? Rat(0) : tight_upper(V, small, sys.epsilon);
        residuals.push_back({e.ideal, std::move(bound), std::move(w)});
    }
    return {std::move(r), sys.epsilon, std::move(residuals), V.id()};
}

}  // namespace crat
