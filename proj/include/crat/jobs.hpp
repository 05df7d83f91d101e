#pragma once

#include <json.hpp>

#include "crat/hyperspace.hpp"
#include "crat/interp.hpp"
#include "crat/solver.hpp"

namespace crat::jobs {

using json = nlohmann::json;

// JSON encoding used on every external surface: rationals as "num/den"
// strings, quadratic integers as {"a","b"}, complex rationals as
// {"re","im"}, polynomials as ascending coefficient arrays.
json rat_json(const Rat& q);
Rat parse_rat(const json& j);
json int_json(const Int& n);
Int parse_int(const json& j);
json crat_json(const CRat& c);
CRat parse_crat(const json& j);
json ring_json(const RingContext& ctx);
RingContext parse_ring(const json& j);
json element_json(const Element& e);
Element parse_element(const RingContext& ctx, const json& j);
json ideal_json(const PrincipalIdeal& I);
PrincipalIdeal parse_ideal(const RingContext& ctx, const json& j);
json certificate_json(const Certificate& cert);

/// Executes a job spec {"command", "ring", "payload"} and returns the full
/// result document (command + ring + echoed input + result). Deterministic:
/// identical spec bytes produce identical result bytes.
json run(const json& spec, unsigned long degree_budget = kDefaultDegreeBudget);

/// Re-checks a result document from scratch: every membership and valuation
/// claim in its certificate, then a full deterministic reproduction of the
/// result subtree. Returns true on pass; on failure returns false and sets
/// `why` when provided.
bool verify(const json& result, unsigned long degree_budget = kDefaultDegreeBudget,
            std::string* why = nullptr);

/// Canonical serialization used by the CLI (sorted keys, fixed indentation).
std::string dump_canonical(const json& j);

}  // namespace crat::jobs
