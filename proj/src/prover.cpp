#include "macgreen/prover.hpp"

#include <json.hpp>

#include <functional>
#include <sstream>
#include <stdexcept>

namespace macgreen {

const char* verdict_name(VerdictTag tag) {
    switch (tag) {
        case VerdictTag::NotGorenstein: return "not-gorenstein";
        case VerdictTag::Inconclusive: return "inconclusive";
        case VerdictTag::ForcedWLP: return "forced-wlp";
        case VerdictTag::WLPUnknown: return "wlp-unknown";
    }
    return "inconclusive";
}

VerdictTag verdict_from_name(const std::string& name) {
    for (VerdictTag t : {VerdictTag::NotGorenstein, VerdictTag::Inconclusive,
                         VerdictTag::ForcedWLP, VerdictTag::WLPUnknown})
        if (name == verdict_name(t)) return t;
    throw std::invalid_argument("unknown verdict '" + name + "'");
}

const char* candidate_label_name(CandidateLabel label) {
    switch (label) {
        case CandidateLabel::NotGorenstein: return "not-gorenstein";
        case CandidateLabel::Inconclusive: return "inconclusive";
        case CandidateLabel::BelowH2Bound: return "below-h2-bound";
    }
    return "inconclusive";
}

namespace {

std::string socle_tag_string(const SocleType& s) {
    switch (s.tag) {
        case SocleType::Tag::Level: return "level";
        case SocleType::Tag::Gorenstein: return "gorenstein";
        case SocleType::Tag::ZeroSocleBelow:
            return "zero-socle-below:" + std::to_string(s.below_degree);
        case SocleType::Tag::Unspecified: return "unspecified";
    }
    return "unspecified";
}

SocleType socle_from_string(const std::string& tag) {
    if (tag == "level") return SocleType::level();
    if (tag == "gorenstein") return SocleType::gorenstein();
    if (tag == "unspecified") return SocleType::unspecified();
    if (tag.rfind("zero-socle-below:", 0) == 0)
        return SocleType::zero_socle_below(std::stoi(tag.substr(17)));
    throw std::invalid_argument("unknown socle tag '" + tag + "'");
}

Certificate precheck_certificate(const HVector& h, const CharAssumption& chr,
                                 const std::string& conclusion) {
    Certificate cert;
    cert.h = h;
    cert.chr = chr;
    cert.socle = SocleType::gorenstein();
    cert.verdict = VerdictTag::NotGorenstein;
    cert.conclusion = conclusion;
    return cert;
}

/// First degree whose interval emptied, for the conclusion text.
int first_empty_degree(const DecompositionState& s) {
    for (int i = 0; i <= s.socle_degree(); ++i)
        if (s.c(i).empty()) return i;
    return -1;
}

}  // namespace

Verdict analyze_gorenstein(const HVector& h, const CharAssumption& chr,
                           const AnalyzeOptions& opts) {
    Verdict v;
    if (!h.is_o_sequence()) {
        v.tag = VerdictTag::NotGorenstein;
        // name the offending step for the reader
        std::ostringstream os;
        for (std::size_t d = 1; d + 1 < h.size(); ++d) {
            const BigInt cap = macaulay_bound(h[d], static_cast<int>(d));
            if (BigInt(h[d + 1]) > cap) {
                os << "h_" << d + 1 << " = " << h[d + 1] << " exceeds the Macaulay bound ((h_" << d
                   << ")_(" << d << "))_1^1 = " << cap
                   << "; no standard graded algebra has this Hilbert function";
                break;
            }
        }
        v.certificate = precheck_certificate(h, chr, os.str());
        return v;
    }
    if (!h.is_symmetric() || h[h.size() - 1] != 1) {
        v.tag = VerdictTag::NotGorenstein;
        v.certificate = precheck_certificate(
            h, chr,
            "h is not symmetric (h_i != h_{e-i} for some i); the h-vector of an artinian "
            "Gorenstein algebra is symmetric");
        return v;
    }

    DecompositionState s = init_state(h, SocleType::gorenstein(), chr);
    const PropagateStatus status = propagate(s, opts.engine);
    if (status == PropagateStatus::Empty) {
        v.tag = VerdictTag::NotGorenstein;
        Certificate cert;
        cert.h = h;
        cert.chr = chr;
        cert.socle = SocleType::gorenstein();
        cert.verdict = VerdictTag::NotGorenstein;
        cert.steps = s.trace();
        std::ostringstream os;
        os << "the interval for c_" << first_empty_degree(s)
           << " emptied: no Stanley split h = b + c admits a symmetric colon h-vector b and a "
              "restriction h-vector c within Green's caps and Macaulay growth (char "
           << chr.to_string() << "); h is not a Gorenstein h-vector";
        cert.conclusion = os.str();
        v.certificate = std::move(cert);
        return v;
    }

    v.tag = VerdictTag::Inconclusive;
    if (opts.want_witnesses) {
        EnumerationResult en = enumerate_decompositions(h, SocleType::gorenstein(), chr,
                                                        opts.witness_cap, opts.engine);
        v.witness_budget_exceeded = en.budget_exceeded;
        v.witnesses = std::move(en.found);
    }
    return v;
}

FamilyReport analyze_socle4_family(long long m_max, const AnalyzeOptions& opts) {
    if (m_max < 2) throw std::invalid_argument("the socle-degree-4 family starts at m = 2");
    FamilyReport report;
    report.all_not_gorenstein = true;
    AnalyzeOptions o = opts;
    o.want_witnesses = false;
    for (long long m = 2; m <= m_max; ++m) {
        FamilyEntry entry;
        entry.param = m;
        entry.h = family_gorenstein_gap(m);
        entry.verdict = analyze_gorenstein(entry.h, CharAssumption::not_two(), o);
        if (entry.verdict.tag != VerdictTag::NotGorenstein) report.all_not_gorenstein = false;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

FamilyReport analyze_socle5_codim14(const AnalyzeOptions& opts) {
    FamilyReport report;
    report.all_not_gorenstein = true;
    AnalyzeOptions o = opts;
    o.want_witnesses = false;
    for (long long a = 1; a <= 13; ++a) {
        FamilyEntry entry;
        entry.param = a;
        entry.h = HVector({1, 14, a, a, 14, 1});
        entry.verdict = analyze_gorenstein(entry.h, CharAssumption::zero(), o);
        if (entry.verdict.tag != VerdictTag::NotGorenstein) report.all_not_gorenstein = false;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

namespace {

Verdict wlp_from_state(const HVector& h, SocleType socle, const CharAssumption& chr,
                       DecompositionState&& s, PropagateStatus status, const char* rule,
                       const std::string& conclusion) {
    Verdict v;
    Certificate cert;
    cert.h = h;
    cert.chr = chr;
    cert.socle = socle;
    cert.steps = s.trace();
    if (status == PropagateStatus::Empty) {
        v.tag = VerdictTag::NotGorenstein;
        cert.verdict = VerdictTag::NotGorenstein;
        cert.conclusion =
            "the propagation emptied an interval: no algebra with the assumed socle realizes "
            "this h-vector at all";
    } else {
        v.tag = VerdictTag::ForcedWLP;
        cert.verdict = VerdictTag::ForcedWLP;
        cert.wlp_rule = rule;
        cert.conclusion = conclusion;
    }
    v.certificate = std::move(cert);
    return v;
}

}  // namespace

Verdict wlp_analyze(const HVector& h, SocleType socle, const CharAssumption& chr,
                    const EngineOptions& opts) {
    Verdict unknown;
    unknown.tag = VerdictTag::WLPUnknown;
    if (!h.is_o_sequence()) return unknown;
    if (!chr.excludes_two()) return unknown;  // every deduction below needs char != 2
    const int e = h.socle_degree();

    // W1: Gorenstein with codimension = socle degree >= 3 and h_2 <= e.
    // (h_2 >= e is itself forced; equality pins the whole restriction.)
    if (socle.is_gorenstein() && h.is_symmetric() && e >= 3 && h[1] == e && h[2] <= e) {
        DecompositionState s = init_state(h, SocleType::gorenstein(), chr);
        const PropagateStatus status = propagate(s, opts);
        if (status == PropagateStatus::Empty)
            return wlp_from_state(h, SocleType::gorenstein(), chr, std::move(s), status, "W1", "");
        bool pinned = s.c(1).pinned(e - 1);
        for (int i = 2; i <= e && pinned; ++i) pinned = s.c(i).pinned(0);
        if (pinned && h[2] == e) {
            std::ostringstream os;
            os << "rule W1 (codimension = socle degree = " << e << ", h_2 = " << e
               << "): the restriction h-vector is pinned to c = (1," << e - 1
               << ",0,...,0), so multiplication by a general linear form is surjective from "
                  "degree 1 on and injective below; every Gorenstein algebra with this h-vector "
                  "has the weak Lefschetz property";
            return wlp_from_state(h, SocleType::gorenstein(), chr, std::move(s), status, "W1",
                                  os.str());
        }
    }

    // W2: level, codimension >= 3, h_e = e+1 and h_{e-1} <= h_e.
    if (socle.is_level() && h[1] >= 3 && h[static_cast<std::size_t>(e)] == e + 1 &&
        h[static_cast<std::size_t>(e - 1)] <= h[static_cast<std::size_t>(e)]) {
        DecompositionState s = init_state(h, SocleType::level(), chr);
        const PropagateStatus status = propagate(s, opts);
        if (status == PropagateStatus::Fixpoint && s.c(e).pinned(0)) {
            std::ostringstream os;
            os << "rule W2 (level, codimension >= 3, h_" << e << " = " << e + 1
               << "): the top restriction entry is forced to 0, so multiplication by a general "
                  "linear form is surjective onto the top degree; with h_"
               << e - 1 << " <= h_" << e << " this forces h_" << e - 1 << " = h_" << e
               << " and injectivity in every lower degree of a level algebra; the weak "
                  "Lefschetz property holds";
            return wlp_from_state(h, SocleType::level(), chr, std::move(s), status, "W2", os.str());
        }
    }

    // W3: Gorenstein of shape (1,4,a,4,1).
    if (socle.is_gorenstein() && e == 4 && h[1] == 4 && h[3] == 4 && h[4] == 1) {
        DecompositionState s = init_state(h, SocleType::gorenstein(), chr);
        const PropagateStatus status = propagate(s, opts);
        if (status == PropagateStatus::Empty)
            return wlp_from_state(h, SocleType::gorenstein(), chr, std::move(s), status, "W3", "");
        if (s.c(3).pinned(0)) {
            std::ostringstream os;
            os << "rule W3 (Gorenstein, h = (1,4," << h[2]
               << ",4,1)): c_3 = 0 forces b = (1,4,4,1); multiplication by a general linear form "
                  "is injective up to degree 1 and surjective from degree 2 on, which is maximal "
                  "rank in every degree; the weak Lefschetz property holds (char != 2)";
            return wlp_from_state(h, SocleType::gorenstein(), chr, std::move(s), status, "W3",
                                  os.str());
        }
    }

    // W4: level with h_e = C(m+e,e) and h_{e-1} = C(m+e-1,e-1)+1.
    if (socle.is_level()) {
        const auto m = binomial_shape(h[static_cast<std::size_t>(e)], e);
        if (m && BigInt(h[static_cast<std::size_t>(e - 1)]) == binom(*m + e - 1, e - 1) + 1) {
            DecompositionState s = init_state(h, SocleType::level(), chr);
            const PropagateStatus status = propagate(s, opts);
            if (status == PropagateStatus::Fixpoint &&
                BigInt(s.c(e).hi) < binom(*m - 1 + e, e)) {
                std::ostringstream os;
                os << "rule W4 (level, h_" << e << " = C(" << *m + e << "," << e << "), h_"
                   << e - 1 << " = C(" << *m + e - 1 << "," << e - 1
                   << ")+1): failing injectivity in degree " << e - 1
                   << " would push the restriction to Green's cap C(" << *m - 1 + e << "," << e
                   << "), which rigidity excludes; multiplication by a general linear form is "
                      "injective there and, the algebra being level, in every lower degree; all "
                      "maps through the top degree have maximal rank, so the weak Lefschetz "
                      "property holds";
                return wlp_from_state(h, SocleType::level(), chr, std::move(s), status, "W4",
                                      os.str());
            }
        }
    }

    return unknown;
}

H2CheckResult h2_lower_bound_check(const HVector& h) {
    const int e = h.socle_degree();
    if (e < 2) throw std::invalid_argument("h_2 bound check needs socle degree >= 2");
    if (e == 2) return {true, 1};  // (1,r,1): the bound formula degenerates below degree 3
    H2CheckResult res;
    res.bound = h2_lower_bound(h[1], e);
    res.pass = BigInt(h[2]) >= res.bound;
    return res;
}

CandidateReport enumerate_candidates(long long r, int e, const CharAssumption& chr,
                                     long long budget, const AnalyzeOptions& opts) {
    if (r < 1 || e < 2) throw std::invalid_argument("enumerate_candidates needs r >= 1, e >= 2");
    CandidateReport report;
    AnalyzeOptions o = opts;
    o.want_witnesses = false;

    std::vector<long long> half(static_cast<std::size_t>(e) + 1, 0);
    half[0] = 1;
    half[1] = r;
    long long examined = 0;

    const std::function<void(int)> fill = [&](int i) {
        if (report.budget_exceeded) return;
        if (i > e / 2) {
            if (++examined > budget) {
                report.budget_exceeded = true;
                return;
            }
            std::vector<long long> full(static_cast<std::size_t>(e) + 1);
            for (int k = 0; k <= e; ++k)
                full[static_cast<std::size_t>(k)] =
                    half[static_cast<std::size_t>(std::min(k, e - k))];
            HVector h(full);
            if (!h.is_o_sequence()) return;
            Candidate cand{h, CandidateLabel::Inconclusive};
            if (e >= 3 && BigInt(h[2]) < h2_lower_bound(r, e)) {
                cand.label = CandidateLabel::BelowH2Bound;
                ++report.count_below_bound;
            } else {
                const Verdict v = analyze_gorenstein(h, chr, o);
                if (v.tag == VerdictTag::NotGorenstein) {
                    cand.label = CandidateLabel::NotGorenstein;
                    ++report.count_not_gorenstein;
                } else {
                    cand.label = CandidateLabel::Inconclusive;
                    ++report.count_inconclusive;
                }
            }
            report.candidates.push_back(std::move(cand));
            return;
        }
        const BigInt cap = macaulay_bound(half[static_cast<std::size_t>(i) - 1], i - 1);
        const long long hi = cap > 4'000'000 ? 4'000'000 : static_cast<long long>(cap);
        for (long long v = 1; v <= hi && !report.budget_exceeded; ++v) {
            half[static_cast<std::size_t>(i)] = v;
            fill(i + 1);
        }
    };
    fill(2);
    return report;
}

std::string certificate_to_json(const Certificate& cert) {
    nlohmann::json j;
    j["h"] = cert.h.entries();
    j["char"] = cert.chr.to_string();
    j["socle"] = socle_tag_string(cert.socle);
    j["verdict"] = verdict_name(cert.verdict);
    if (!cert.wlp_rule.empty()) j["rule"] = cert.wlp_rule;
    j["steps"] = nlohmann::json::parse(trace_to_json(cert.steps));
    j["conclusion"] = cert.conclusion;
    return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    Certificate cert;
    std::vector<long long> vals;
    for (const auto& v : j.at("h")) vals.push_back(v.get<long long>());
    cert.h = HVector(vals);
    cert.chr = CharAssumption::parse(j.at("char").get<std::string>());
    cert.socle = socle_from_string(j.value("socle", std::string("gorenstein")));
    cert.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    cert.wlp_rule = j.value("rule", std::string());
    cert.steps = trace_from_json(j.at("steps").dump());
    cert.conclusion = j.value("conclusion", std::string());
    return cert;
}

bool certificate_replay(const Certificate& cert) {
    // Precheck certificates carry no steps; re-verify the precheck itself.
    if (cert.steps.empty() && cert.verdict == VerdictTag::NotGorenstein)
        return !cert.h.is_o_sequence() || !cert.h.is_symmetric() ||
               cert.h[cert.h.size() - 1] != 1;
    try {
        DecompositionState s = init_state(cert.h, cert.socle, cert.chr);
        for (const auto& step : cert.steps) {
            const Interval current = step.target == 'b' ? s.b(step.degree) : s.c(step.degree);
            if (current != step.before) return false;
            const bool changed =
                step.target == 'b'
                    ? s.narrow_b(step.degree, step.after.lo, step.after.hi, step.rule, step.detail,
                                 step.anchor)
                    : s.narrow_c(step.degree, step.after.lo, step.after.hi, step.rule, step.detail,
                                 step.anchor);
            if (!changed) return false;
            const Interval now = step.target == 'b' ? s.b(step.degree) : s.c(step.degree);
            if (now != step.after) return false;
        }
        const bool empty = s.any_empty();
        if (cert.verdict == VerdictTag::NotGorenstein) return empty;
        return !empty;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace macgreen
