#pragma once

#include <memory>
#include <vector>

#include "crat/element.hpp"

namespace crat {

/// A pseudo-valuation: nonnegative, subadditive, submultiplicative, symmetric,
/// and zero at zero. Values are certified rational enclosures; the three
/// shipped families (p-adic, |a+b*sqrt2|, weighted l1 disk seminorm) all
/// decide comparisons against rational thresholds exactly.
class ValuationImpl {
  public:
    virtual ~ValuationImpl() = default;
    virtual std::string id() const = 0;
    virtual const RingContext& ring() const = 0;
    /// Exact value when it is a representable rational, nullopt otherwise.
    virtual std::optional<Rat> exact_value(const Element& x) const = 0;
    /// Certified enclosure; width shrinks with prec_bits.
    virtual RealBound bound(const Element& x, unsigned prec_bits) const = 0;
    /// Sign of V(x) - threshold, decided exactly. Default: adaptive refinement.
    virtual int compare(const Element& x, const Rat& threshold) const;
};

class PseudoValuation {
  public:
    explicit PseudoValuation(std::shared_ptr<const ValuationImpl> impl) : impl_(std::move(impl)) {}

    std::string id() const { return impl_->id(); }
    const RingContext& ring() const { return impl_->ring(); }

    std::optional<Rat> exact_value(const Element& x) const { return impl_->exact_value(x); }
    RealBound bound(const Element& x, unsigned prec_bits) const { return impl_->bound(x, prec_bits); }

    /// Exact value when available, else a tight certified upper bound.
    Rat evaluate(const Element& x) const;
    Rat upper(const Element& x, unsigned prec_bits = 64) const;
    Rat lower(const Element& x, unsigned prec_bits = 64) const;

    /// Sign of V(x) - threshold.
    int compare(const Element& x, const Rat& threshold) const { return impl_->compare(x, threshold); }
    bool less_than(const Element& x, const Rat& threshold) const { return compare(x, threshold) < 0; }

    /// Smallest certified upper bound below `below`, refining as needed.
    /// Requires V(x) < below to hold; throws ToleranceViolation otherwise.
    Rat upper_below(const Element& x, const Rat& below) const;

    bool operator==(const PseudoValuation& o) const {
        return impl_ == o.impl_ || (id() == o.id() && ring() == o.ring());
    }

  private:
    std::shared_ptr<const ValuationImpl> impl_;
};

PseudoValuation padic_valuation(const RingContext& ctx);
PseudoValuation quad_abs_valuation(const RingContext& ctx);
PseudoValuation disk_seminorm(const RingContext& ctx);

/// The canonical valuation of a context.
PseudoValuation valuation_for(const RingContext& ctx);

/// p-adic exponent v_p(n); only meaningful for n != 0.
unsigned long padic_exponent(const Int& n, const Int& p);

/// Least m >= 0 with p^-m < eps: the integer trace of B(eps) is p^m Z.
unsigned long padic_ball_exponent(const Int& p, const Rat& eps);

/// V_p(n) = p^-v_p(n), V_p(0) = 0.
Rat padic_value(const Int& n, const Int& p);

/// Certified enclosure of the weighted l1 seminorm sum |c_k| R^k.
RealBound poly_seminorm_bound(const PolyC& f, const Rat& R, unsigned prec_bits);

/// Exact value when every coefficient modulus is rational, else upper bound.
Rat poly_seminorm(const PolyC& f, const Rat& R);

// ---------------------------------------------------------------------------
// Axiom and ball checking harness

struct Ball {
    PseudoValuation valuation;
    Element center;
    Rat radius;  // must be positive
};

/// Strict membership: V(x - center) < radius.
bool ball_contains(const Ball& b, const Element& x);

struct AxiomViolation {
    int axiom;  // 1: subadditivity, 2: submultiplicativity, 3: symmetry, 4: V(0)=0
    size_t sample_index;
    std::string detail;
};

/// Reports every certified axiom violation over the sample pairs. A true
/// pseudo-valuation can never be flagged: a report requires a proven strict
/// inequality between certified enclosures.
std::vector<AxiomViolation> pv_axiom_check(const PseudoValuation& V,
                                           const std::vector<std::pair<Element, Element>>& samples);

struct BallInclusionViolation {
    size_t sample_index;
    std::string detail;
};

/// Checks x in B(eps), y in B(delta)  =>  x+y in B(eps+delta), xy in B(eps*delta)
/// over the samples; premises and conclusions are decided exactly.
std::vector<BallInclusionViolation> ball_arithmetic_check(
    const PseudoValuation& V, const Rat& eps, const Rat& delta,
    const std::vector<std::pair<Element, Element>>& samples);

}  // namespace crat
