#include "macgreen/decomposition.hpp"

#include <json.hpp>

#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace macgreen {

namespace anchors {

constexpr const char* kMacaulay = "Macaulay's theorem: h_{d+1} <= ((h_d)_(d))_1^1";
constexpr const char* kGreen = "Green's hyperplane restriction theorem: h'_d <= ((h_d)_(d))_0^{-1}";
constexpr const char* kSymmetry =
    "Stanley decomposition: b is the h-vector of the Gorenstein colon algebra R/(I:L), "
    "so b_i = b_{e+1-i}";
constexpr const char* kLinearRigidity =
    "Green's linear-space rigidity: h_d = C(m+d,d) and h'_d = C(m-1+d,d) force "
    "h_i = C(m+i,i) for all i <= d (char != 2, zero socle below degree d)";
constexpr const char* kPlaneRigidity =
    "Green's plane-curve rigidity: h_d = C(d+2,2)-C(d-m+2,2) and h'_d = m force "
    "plane-curve growth up to degree d (char 0 or large enough)";
constexpr const char* kNonNegativity = "interval consistency: 0 <= c_i <= h_i";

}  // namespace anchors

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::NonNegativity: return "NonNegativity";
        case Rule::SymmetryLink: return "SymmetryLink";
        case Rule::GreenCap: return "GreenCap";
        case Rule::LinearSpaceRigidity: return "LinearSpaceRigidity";
        case Rule::PlaneCurveRigidity: return "PlaneCurveRigidity";
        case Rule::MacaulayGrowthC: return "MacaulayGrowthC";
        case Rule::MacaulayGrowthB: return "MacaulayGrowthB";
    }
    return "NonNegativity";
}

Rule rule_from_name(const std::string& name) {
    for (Rule r : {Rule::NonNegativity, Rule::SymmetryLink, Rule::GreenCap,
                   Rule::LinearSpaceRigidity, Rule::PlaneCurveRigidity, Rule::MacaulayGrowthC,
                   Rule::MacaulayGrowthB})
        if (name == rule_name(r)) return r;
    throw std::invalid_argument("unknown rule name '" + name + "'");
}

namespace {

constexpr long long kEntryLimit = 1'000'000'000'000LL;  // keeps interval arithmetic in range

long long to_ll(const BigInt& v) {
    if (v > kEntryLimit) return kEntryLimit;
    if (v < -kEntryLimit) return -kEntryLimit;
    return static_cast<long long>(v);
}

}  // namespace

DecompositionState::DecompositionState(HVector h, SocleType socle, CharAssumption chr)
    : h_(std::move(h)), socle_(socle), char_(chr) {
    if (!h_.is_o_sequence())
        throw std::invalid_argument(
            "h-vector violates Macaulay growth; no standard graded algebra realizes it");
    for (long long v : h_.entries())
        if (v > kEntryLimit) throw std::invalid_argument("h-vector entry too large for the engine");
    const int e = socle_degree();
    c_.resize(static_cast<std::size_t>(e) + 1);
    for (int i = 0; i <= e; ++i) c_[static_cast<std::size_t>(i)] = {0, h_[static_cast<std::size_t>(i)]};
    auto pin = [&](int i, long long lo, long long hi) {
        auto& iv = c_[static_cast<std::size_t>(i)];
        iv.lo = std::max(iv.lo, lo);
        iv.hi = std::min(iv.hi, hi);
    };
    // Endpoints of the Stanley split: c_0 = 1 and b_1 = 1 hold for any
    // linear form outside the ideal; a Gorenstein socle adds c_e = 0 and
    // b_e = 1.
    pin(0, 1, 1);
    pin(1, h_[1] - 1, h_[1] - 1);
    if (gorenstein_mode()) {
        pin(e, 0, 0);
        pin(e, h_[static_cast<std::size_t>(e)] - 1, h_[static_cast<std::size_t>(e)] - 1);
    }
}

Interval DecompositionState::b(int i) const {
    const Interval ci = c(i);
    const long long hi_ = h_[static_cast<std::size_t>(i)];
    return {hi_ - ci.hi, hi_ - ci.lo};
}

bool DecompositionState::any_empty() const {
    for (const auto& iv : c_)
        if (iv.empty()) return true;
    return false;
}

bool DecompositionState::narrow_c(int i, long long lo, long long hi, Rule rule,
                                  const std::string& detail, const std::string& anchor) {
    Interval& iv = c_[static_cast<std::size_t>(i)];
    const Interval before = iv;
    const Interval after{std::max(iv.lo, lo), std::min(iv.hi, hi)};
    if (after == before) return false;
    iv = after;
    trace_.push_back({rule, i, 'c', before, after, detail, anchor});
    return true;
}

bool DecompositionState::narrow_b(int i, long long lo, long long hi, Rule rule,
                                  const std::string& detail, const std::string& anchor) {
    const long long hv = h_[static_cast<std::size_t>(i)];
    Interval& iv = c_[static_cast<std::size_t>(i)];
    const Interval before_b = b(i);
    const Interval after_c{std::max(iv.lo, hv - hi), std::min(iv.hi, hv - lo)};
    if (after_c == iv) return false;
    iv = after_c;
    trace_.push_back({rule, i, 'b', before_b, b(i), detail, anchor});
    return true;
}

DecompositionState init_state(const HVector& h, SocleType socle, CharAssumption chr) {
    return DecompositionState(h, socle, chr);
}

bool rule_non_negativity(DecompositionState& s) {
    bool changed = false;
    const int e = s.socle_degree();
    for (int i = 0; i <= e; ++i)
        changed |= s.narrow_c(i, 0, s.h()[static_cast<std::size_t>(i)], Rule::NonNegativity,
                              "clamp to 0 <= c_" + std::to_string(i) + " <= h_" + std::to_string(i),
                              anchors::kNonNegativity);
    return changed;
}

bool rule_symmetry_link(DecompositionState& s) {
    if (!s.gorenstein_mode()) return false;
    bool changed = false;
    const int e = s.socle_degree();
    for (int i = 1; i <= e; ++i) {
        const int j = e + 1 - i;
        if (j <= i || j > e) continue;
        const long long delta = s.h()[static_cast<std::size_t>(i)] - s.h()[static_cast<std::size_t>(j)];
        const auto link = [&](int from, int to, long long d) {
            const Interval f = s.c(from);
            if (f.empty()) return false;
            std::ostringstream os;
            os << "b_" << to << " = b_" << from << " gives c_" << to << " - c_" << from << " = h_"
               << to << " - h_" << from << " = " << d;
            return s.narrow_c(to, f.lo + d, f.hi + d, Rule::SymmetryLink, os.str(),
                              anchors::kSymmetry);
        };
        changed |= link(j, i, delta);
        changed |= link(i, j, -delta);
    }
    return changed;
}

bool rule_green_cap(DecompositionState& s) {
    bool changed = false;
    const int e = s.socle_degree();
    for (int d = 1; d <= e; ++d) {
        const Interval cd = s.c(d);
        if (cd.empty()) continue;
        const BigInt cap = green_bound(s.h()[static_cast<std::size_t>(d)], d);
        if (cap >= cd.hi) continue;
        std::ostringstream os;
        os << "c_" << d << " <= ((" << s.h()[static_cast<std::size_t>(d)] << ")_(" << d
           << "))_0^{-1} = " << cap;
        changed |= s.narrow_c(d, cd.lo, to_ll(cap), Rule::GreenCap, os.str(), anchors::kGreen);
    }
    return changed;
}

namespace {

struct RigidityCut {
    bool applies = false;
    long long cap = 0;
    long long m = 0;
    int differs_at = -1;
};

RigidityCut linear_space_cut(const HVector& h, int d, const SocleType& socle,
                             const CharAssumption& chr) {
    RigidityCut cut;
    if (!chr.excludes_two()) return cut;
    if (!socle.zero_socle_below_degree(d, h.socle_degree())) return cut;
    const auto m = binomial_shape(h[static_cast<std::size_t>(d)], d);
    if (!m) return cut;
    const BigInt gb = green_bound(h[static_cast<std::size_t>(d)], d);
    if (gb != binom(*m - 1 + d, d)) return cut;  // cap must be the single-term value
    for (int i = 0; i <= d; ++i)
        if (BigInt(h[static_cast<std::size_t>(i)]) != binom(*m + i, i)) {
            cut.applies = true;
            cut.differs_at = i;
            break;
        }
    if (!cut.applies) return cut;
    cut.m = *m;
    cut.cap = to_ll(gb - 1);
    return cut;
}

RigidityCut plane_curve_cut(const HVector& h, int d, const SocleType& socle,
                            const CharAssumption& chr, const EngineOptions& opts) {
    RigidityCut cut;
    if (!socle.zero_socle_below_degree(d, h.socle_degree())) return cut;
    const auto m = plane_curve_shape(h[static_cast<std::size_t>(d)], d);
    if (!m) return cut;
    const bool char_ok = opts.plane_curve_footnote_gate
                             ? chr.zero_or_at_least_excluding_two(*m)
                             : chr.zero_or_greater_than(static_cast<long long>(d) + 1);
    if (!char_ok) return cut;
    const BigInt gb = green_bound(h[static_cast<std::size_t>(d)], d);
    if (gb != *m) return cut;  // cap must equal the curve degree
    const HVector prefix = plane_curve_prefix(*m, d);
    for (int i = 0; i <= d; ++i)
        if (h[static_cast<std::size_t>(i)] != prefix[static_cast<std::size_t>(i)]) {
            cut.applies = true;
            cut.differs_at = i;
            break;
        }
    if (!cut.applies) return cut;
    cut.m = *m;
    cut.cap = *m - 1;
    return cut;
}

}  // namespace

bool rule_linear_space_rigidity(DecompositionState& s) {
    bool changed = false;
    const int e = s.socle_degree();
    for (int d = 1; d <= e; ++d) {
        const Interval cd = s.c(d);
        if (cd.empty() || cd.hi < 1) continue;
        const RigidityCut cut = linear_space_cut(s.h(), d, s.socle(), s.char_assumption());
        if (!cut.applies || cut.cap >= cd.hi) continue;
        std::ostringstream os;
        os << "h_" << d << " = C(" << cut.m + d << "," << d << "); attaining c_" << d << " = C("
           << cut.m - 1 + d << "," << d << ") would force binomial growth, but the entries differ "
           << "at degree " << cut.differs_at << "; hence c_" << d << " <= " << cut.cap;
        changed |= s.narrow_c(d, cd.lo, cut.cap, Rule::LinearSpaceRigidity, os.str(),
                              anchors::kLinearRigidity);
    }
    return changed;
}

bool rule_plane_curve_rigidity(DecompositionState& s, const EngineOptions& opts) {
    bool changed = false;
    const int e = s.socle_degree();
    for (int d = 1; d <= e; ++d) {
        const Interval cd = s.c(d);
        if (cd.empty() || cd.hi < 1) continue;
        const RigidityCut cut = plane_curve_cut(s.h(), d, s.socle(), s.char_assumption(), opts);
        if (!cut.applies || cut.cap >= cd.hi) continue;
        std::ostringstream os;
        os << "h_" << d << " is the degree-" << d << " entry of a degree-" << cut.m
           << " plane curve; attaining c_" << d << " = " << cut.m
           << " would force plane-curve growth, but the entries differ at degree "
           << cut.differs_at << "; hence c_" << d << " <= " << cut.cap;
        changed |= s.narrow_c(d, cd.lo, cut.cap, Rule::PlaneCurveRigidity, os.str(),
                              anchors::kPlaneRigidity);
    }
    return changed;
}

bool rule_macaulay_growth_c(DecompositionState& s) {
    bool changed = false;
    const int e = s.socle_degree();
    for (int d = 1; d < e; ++d) {
        const Interval cd = s.c(d);
        const Interval cn = s.c(d + 1);
        if (cd.empty() || cn.empty()) continue;
        const BigInt bound = macaulay_bound(cd.hi, d);
        if (bound >= cn.hi) continue;
        std::ostringstream os;
        os << "c_" << d + 1 << " <= ((c_" << d << ")_(" << d << "))_1^1 <= ((" << cd.hi << ")_("
           << d << "))_1^1 = " << bound;
        changed |= s.narrow_c(d + 1, cn.lo, to_ll(bound), Rule::MacaulayGrowthC, os.str(),
                              anchors::kMacaulay);
    }
    return changed;
}

bool rule_macaulay_growth_b(DecompositionState& s) {
    if (!s.gorenstein_mode()) return false;
    bool changed = false;
    const int e = s.socle_degree();
    // b_i sits in degree i-1 of the colon algebra, so growth runs from i = 2.
    for (int i = 2; i < e; ++i) {
        const Interval bi = s.b(i);
        const Interval bn = s.b(i + 1);
        if (bi.empty() || bn.empty()) continue;
        const BigInt bound = macaulay_bound(bi.hi, i - 1);
        if (bound >= bn.hi) continue;
        std::ostringstream os;
        os << "b_" << i + 1 << " <= ((b_" << i << ")_(" << i - 1 << "))_1^1 <= ((" << bi.hi
           << ")_(" << i - 1 << "))_1^1 = " << bound;
        changed |= s.narrow_b(i + 1, bn.lo, to_ll(bound), Rule::MacaulayGrowthB, os.str(),
                              anchors::kMacaulay);
    }
    return changed;
}

PropagateStatus propagate(DecompositionState& s, const EngineOptions& opts) {
    if (s.any_empty()) return PropagateStatus::Empty;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int step = 0; step < 7; ++step) {
            switch (step) {
                case 0: changed |= rule_non_negativity(s); break;
                case 1: changed |= rule_symmetry_link(s); break;
                case 2: changed |= rule_green_cap(s); break;
                case 3: changed |= rule_linear_space_rigidity(s); break;
                case 4: changed |= rule_plane_curve_rigidity(s, opts); break;
                case 5: changed |= rule_macaulay_growth_c(s); break;
                case 6: changed |= rule_macaulay_growth_b(s); break;
            }
            if (s.any_empty()) return PropagateStatus::Empty;
        }
    }
    return PropagateStatus::Fixpoint;
}

EnumerationResult enumerate_decompositions(const HVector& h, SocleType socle, CharAssumption chr,
                                           long long collect_cap, const EngineOptions& opts) {
    if (!h.is_o_sequence())
        throw std::invalid_argument(
            "h-vector violates Macaulay growth; no standard graded algebra realizes it");
    const int e = h.socle_degree();
    const bool gorenstein = socle.is_gorenstein();

    // Pointwise caps: the box [0, h_d] cut by the Green bound and by the
    // rigidity exclusions, exactly as the propagation rules use them.
    std::vector<long long> cap(static_cast<std::size_t>(e) + 1);
    for (int d = 0; d <= e; ++d) cap[static_cast<std::size_t>(d)] = h[static_cast<std::size_t>(d)];
    for (int d = 1; d <= e; ++d) {
        auto& cd = cap[static_cast<std::size_t>(d)];
        const BigInt gb = green_bound(h[static_cast<std::size_t>(d)], d);
        if (gb < cd) cd = to_ll(gb);
        const RigidityCut lin = linear_space_cut(h, d, socle, chr);
        if (lin.applies && lin.cap < cd) cd = lin.cap;
        const RigidityCut pc = plane_curve_cut(h, d, socle, chr, opts);
        if (pc.applies && pc.cap < cd) cd = pc.cap;
    }

    EnumerationResult res;
    std::vector<long long> c(static_cast<std::size_t>(e) + 1, 0);
    c[0] = 1;
    c[1] = h[1] - 1;
    if (c[1] > cap[1]) return res;  // cannot happen: the Green cap at degree 1 is h_1 - 1
    const int first_free = 2;
    const int last_free = gorenstein ? e - 1 : e;

    res.search_space = 1;
    for (int d = first_free; d <= last_free; ++d) {
        if (cap[static_cast<std::size_t>(d)] < 0) return res;
        res.search_space *= cap[static_cast<std::size_t>(d)] + 1;
    }
    if (res.search_space > opts.enumeration_budget) {
        res.budget_exceeded = true;
        return res;
    }

    // Small memo for the Macaulay bounds the feasibility checks hammer on.
    std::map<std::pair<long long, int>, long long> memo;
    const auto mac = [&](long long n, int d) {
        if (n <= 0) return 0LL;
        const auto key = std::make_pair(n, d);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        const long long v = to_ll(macaulay_bound(n, d));
        memo.emplace(key, v);
        return v;
    };

    const auto feasible = [&]() {
        for (int d = 1; d < e; ++d)
            if (c[static_cast<std::size_t>(d + 1)] > mac(c[static_cast<std::size_t>(d)], d))
                return false;
        if (!gorenstein) return true;  // level mode only tracks c
        std::vector<long long> b(static_cast<std::size_t>(e) + 1, 0);
        for (int i = 0; i <= e; ++i)
            b[static_cast<std::size_t>(i)] =
                h[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i)];
        if (b[static_cast<std::size_t>(e)] != 1) return false;
        for (int i = 1; i <= e; ++i)
            if (b[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(e + 1 - i)])
                return false;
        // b, reindexed from 0, is the h-vector of the colon algebra.
        if (b[1] != 1) return false;
        for (int i = 2; i < e; ++i)
            if (b[static_cast<std::size_t>(i + 1)] > mac(b[static_cast<std::size_t>(i)], i - 1))
                return false;
        return true;
    };

    // Odometer over the free degrees, ascending; deterministic order.
    std::vector<long long> free_vals(static_cast<std::size_t>(std::max(0, last_free - first_free + 1)), 0);
    for (;;) {
        for (std::size_t k = 0; k < free_vals.size(); ++k)
            c[static_cast<std::size_t>(first_free) + k] = free_vals[k];
        if (feasible()) {
            ++res.feasible_count;
            if (static_cast<long long>(res.found.size()) < collect_cap) {
                Decomposition dec;
                dec.c = c;
                dec.b.assign(c.size(), 0);
                for (int i = 0; i <= e; ++i)
                    dec.b[static_cast<std::size_t>(i)] =
                        h[static_cast<std::size_t>(i)] - c[static_cast<std::size_t>(i)];
                res.found.push_back(std::move(dec));
            }
        }
        // advance
        int k = static_cast<int>(free_vals.size()) - 1;
        while (k >= 0 && free_vals[static_cast<std::size_t>(k)] ==
                             cap[static_cast<std::size_t>(first_free + k)])
            free_vals[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
        ++free_vals[static_cast<std::size_t>(k)];
    }
    return res;
}

std::string trace_to_json(const std::vector<RuleApplication>& trace) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& step : trace) {
        nlohmann::json j;
        j["rule"] = rule_name(step.rule);
        j["degree"] = step.degree;
        j["target"] = std::string(1, step.target);
        j["before"] = {step.before.lo, step.before.hi};
        j["after"] = {step.after.lo, step.after.hi};
        j["detail"] = step.detail;
        j["anchor"] = step.anchor;
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

std::vector<RuleApplication> trace_from_json(const std::string& text) {
    const nlohmann::json arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw std::invalid_argument("trace JSON must be an array");
    std::vector<RuleApplication> trace;
    for (const auto& j : arr) {
        RuleApplication step;
        step.rule = rule_from_name(j.at("rule").get<std::string>());
        step.degree = j.at("degree").get<int>();
        step.target = j.value("target", std::string("c")).at(0);
        step.before = {j.at("before")[0].get<long long>(), j.at("before")[1].get<long long>()};
        step.after = {j.at("after")[0].get<long long>(), j.at("after")[1].get<long long>()};
        step.detail = j.value("detail", std::string());
        step.anchor = j.value("anchor", std::string());
        trace.push_back(std::move(step));
    }
    return trace;
}

}  // namespace macgreen
