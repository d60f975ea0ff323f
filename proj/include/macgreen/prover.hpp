#ifndef MACGREEN_PROVER_HPP
#define MACGREEN_PROVER_HPP

#include "macgreen/decomposition.hpp"
#include "macgreen/hvector.hpp"

#include <optional>
#include <string>
#include <vector>

namespace macgreen {

enum class VerdictTag { NotGorenstein, Inconclusive, ForcedWLP, WLPUnknown };

const char* verdict_name(VerdictTag tag);
VerdictTag verdict_from_name(const std::string& name);

/// A replayable proof object: the input, the assumptions, the narrowing
/// steps and a prose conclusion. Re-running the steps from init_state
/// reproduces the final state exactly.
struct Certificate {
    HVector h;
    CharAssumption chr;
    SocleType socle;
    VerdictTag verdict = VerdictTag::Inconclusive;
    std::string wlp_rule;  // "W1".."W4" for forced-WLP certificates
    std::vector<RuleApplication> steps;
    std::string conclusion;
};

struct Verdict {
    VerdictTag tag = VerdictTag::Inconclusive;
    std::optional<Certificate> certificate;       // NotGorenstein / ForcedWLP
    std::vector<Decomposition> witnesses;         // Inconclusive, when budget permits
    bool witness_budget_exceeded = false;
};

struct AnalyzeOptions {
    bool want_witnesses = true;
    long long witness_cap = 10;
    EngineOptions engine;
};

/// Sound-only Gorenstein obstruction test: symmetry and Macaulay prechecks,
/// then constraint propagation over the Stanley split. Inconclusive never
/// asserts that a Gorenstein algebra exists.
Verdict analyze_gorenstein(const HVector& h, const CharAssumption& chr,
                           const AnalyzeOptions& opts = {});

struct FamilyEntry {
    long long param = 0;  // the family parameter (m, or the middle entry a)
    HVector h;
    Verdict verdict;
};

struct FamilyReport {
    std::vector<FamilyEntry> entries;
    bool all_not_gorenstein = false;
};

/// The socle-degree-4 family (1, C(m+3,3), (m+1)^2, C(m+3,3), 1) for
/// m = 2..m_max, analyzed under char != 2. Every member is refuted.
FamilyReport analyze_socle4_family(long long m_max, const AnalyzeOptions& opts = {});

/// All (1,14,a,a,14,1) for a = 1..13 under char 0: each is refuted, which
/// makes every Gorenstein h-vector of socle degree 5 and codimension 14
/// unimodal.
FamilyReport analyze_socle5_codim14(const AnalyzeOptions& opts = {});

/// Forced weak-Lefschetz deductions. Tries, in order:
///   W1: Gorenstein, codimension = socle degree e >= 3, h_2 = e;
///   W2: level, codimension >= 3, h_e = e+1, h_{e-1} <= h_e;
///   W3: Gorenstein, h = (1,4,a,4,1);
///   W4: level, h_e = C(m+e,e) and h_{e-1} = C(m+e-1,e-1)+1.
/// All four need char != 2. May also return NotGorenstein when the
/// shape-matched propagation refutes the input outright.
Verdict wlp_analyze(const HVector& h, SocleType socle, const CharAssumption& chr,
                    const EngineOptions& opts = {});

struct H2CheckResult {
    bool pass = true;
    BigInt bound = 0;
};

/// Compares h_2 against the published lower bound for Gorenstein
/// h-vectors (socle degree >= 3; the degree-2 case carries no
/// information and always passes).
H2CheckResult h2_lower_bound_check(const HVector& h);

enum class CandidateLabel { NotGorenstein, Inconclusive, BelowH2Bound };

const char* candidate_label_name(CandidateLabel label);

struct Candidate {
    HVector h;
    CandidateLabel label;
};

struct CandidateReport {
    std::vector<Candidate> candidates;
    long long count_not_gorenstein = 0;
    long long count_inconclusive = 0;
    long long count_below_bound = 0;
    bool budget_exceeded = false;
};

/// Classifies every symmetric O-sequence with h_1 = r and socle degree e.
/// Candidates below the h_2 bound are rejected outright; the rest go
/// through analyze_gorenstein.
CandidateReport enumerate_candidates(long long r, int e, const CharAssumption& chr,
                                     long long budget = 200000,
                                     const AnalyzeOptions& opts = {});

std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

/// Re-executes the certificate's steps from a fresh init_state and checks
/// every before/after interval and the final verdict.
bool certificate_replay(const Certificate& cert);

}  // namespace macgreen

#endif  // MACGREEN_PROVER_HPP
