#ifndef MACGREEN_DECOMPOSITION_HPP
#define MACGREEN_DECOMPOSITION_HPP

#include "macgreen/binomial.hpp"
#include "macgreen/hvector.hpp"

#include <string>
#include <vector>

namespace macgreen {

/// Closed integer interval [lo, hi]; lo > hi means proven empty.
struct Interval {
    long long lo = 0;
    long long hi = -1;

    bool empty() const { return lo > hi; }
    bool pinned(long long v) const { return lo == v && hi == v; }
    long long width() const { return empty() ? 0 : hi - lo + 1; }

    bool operator==(const Interval&) const = default;
};

enum class Rule {
    NonNegativity,
    SymmetryLink,
    GreenCap,
    LinearSpaceRigidity,
    PlaneCurveRigidity,
    MacaulayGrowthC,
    MacaulayGrowthB,
};

const char* rule_name(Rule r);
Rule rule_from_name(const std::string& name);

/// One narrowing step of the constraint engine. `target` says whether the
/// recorded intervals belong to the c-side (restriction) or the b-side
/// (colon) of the decomposition.
struct RuleApplication {
    Rule rule = Rule::NonNegativity;
    int degree = 0;
    char target = 'c';
    Interval before, after;
    std::string detail;
    std::string anchor;
};

struct EngineOptions {
    /// Gate the plane-curve rigidity rule by "char = 0 or char >= m"
    /// instead of the default, stricter "char = 0 or char > d+1".
    bool plane_curve_footnote_gate = false;
    /// Enumeration refuses search spaces larger than this.
    long long enumeration_budget = 20'000'000;
};

/// Per-degree intervals for the Stanley split h = b + c of a candidate
/// h-vector. Only the c-intervals are stored; b mirrors them through
/// b_i = h_i - c_i, so the two sides can never drift apart.
class DecompositionState {
  public:
    DecompositionState(HVector h, SocleType socle, CharAssumption chr);

    const HVector& h() const { return h_; }
    const SocleType& socle() const { return socle_; }
    const CharAssumption& char_assumption() const { return char_; }
    /// Symmetry and b-side rules apply only when a Gorenstein socle is assumed.
    bool gorenstein_mode() const { return socle_.is_gorenstein(); }

    Interval c(int i) const { return c_[static_cast<std::size_t>(i)]; }
    Interval b(int i) const;  // mirrored view
    int socle_degree() const { return h_.socle_degree(); }

    bool any_empty() const;
    const std::vector<RuleApplication>& trace() const { return trace_; }

    /// Intersects the c-interval at degree i with [lo, hi]; records a trace
    /// step and returns true when the interval actually shrank.
    bool narrow_c(int i, long long lo, long long hi, Rule rule, const std::string& detail,
                  const std::string& anchor);
    /// Same through the b-side view.
    bool narrow_b(int i, long long lo, long long hi, Rule rule, const std::string& detail,
                  const std::string& anchor);

  private:
    HVector h_;
    SocleType socle_;
    CharAssumption char_;
    std::vector<Interval> c_;
    std::vector<RuleApplication> trace_;
};

/// Sets up the interval system of the Stanley split: c_i in [0, h_i],
/// then the forced endpoints c_0 = 1, c_1 = h_1 - 1 and, under a
/// Gorenstein socle, c_e = 0 with b_e = 1. Rejects h-vectors that fail
/// Macaulay admissibility (no algebra realizes them at all).
DecompositionState init_state(const HVector& h, SocleType socle, CharAssumption chr);

// The individual propagation rules. Each applies one full pass and
// returns true if some interval shrank.
bool rule_non_negativity(DecompositionState& s);
bool rule_symmetry_link(DecompositionState& s);
bool rule_green_cap(DecompositionState& s);
bool rule_linear_space_rigidity(DecompositionState& s);
bool rule_plane_curve_rigidity(DecompositionState& s, const EngineOptions& opts = {});
bool rule_macaulay_growth_c(DecompositionState& s);
bool rule_macaulay_growth_b(DecompositionState& s);

enum class PropagateStatus { Fixpoint, Empty };

/// Round-robin of the rules, in a fixed order, until nothing changes or
/// some interval empties. The fixed order only pins down the trace; the
/// fixpoint itself is order-independent.
PropagateStatus propagate(DecompositionState& s, const EngineOptions& opts = {});

/// One admissible integer decomposition h = b + c.
struct Decomposition {
    std::vector<long long> b;
    std::vector<long long> c;
};

struct EnumerationResult {
    bool budget_exceeded = false;
    BigInt search_space = 0;
    long long feasible_count = 0;
    std::vector<Decomposition> found;  // up to the requested cap
};

/// Independent exhaustive check over the same constraint set as
/// propagate(), with no interval shortcuts: every c in the pointwise
/// capped box is tested against the Macaulay, symmetry and rigidity
/// conditions directly.
EnumerationResult enumerate_decompositions(const HVector& h, SocleType socle, CharAssumption chr,
                                           long long collect_cap, const EngineOptions& opts = {});

std::string trace_to_json(const std::vector<RuleApplication>& trace);
std::vector<RuleApplication> trace_from_json(const std::string& text);

}  // namespace macgreen

#endif  // MACGREEN_DECOMPOSITION_HPP
