#include "macgreen/cli.hpp"

#include "macgreen/binomial.hpp"
#include "macgreen/decomposition.hpp"
#include "macgreen/hvector.hpp"
#include "macgreen/oracle.hpp"
#include "macgreen/prover.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace macgreen {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUndecided = 2;

std::string join_ll(const std::vector<long long>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    return os.str();
}

json bigint_json(const BigInt& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(v));
    return json(v.str());
}

// Smallest variable count that makes every token in the text valid.
int infer_vars(const std::string& text) {
    int vars = 1;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == 'x' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            std::size_t j = i + 1;
            int idx = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                idx = idx * 10 + (text[j++] - '0');
            vars = std::max(vars, idx);
            i = j - 1;
        } else if (c == 'y') {
            vars = std::max(vars, 2);
        } else if (c == 'z') {
            vars = std::max(vars, 3);
        } else if (c == 'w') {
            vars = std::max(vars, 4);
        }
    }
    return vars;
}

int parse_var_name(const std::string& name, int nvars) {
    if (name.size() == 1) {
        const char c = name[0];
        int v = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : c == 'w' ? 3 : -1;
        if (v >= 0 && v < nvars) return v;
    }
    if (name.size() >= 2 && name[0] == 'x') {
        const int idx = std::stoi(name.substr(1));
        if (idx >= 1 && idx <= nvars) return idx - 1;
    }
    throw std::invalid_argument("unknown variable '" + name + "'");
}

json witness_json(const Decomposition& dec) {
    return json{{"b", dec.b}, {"c", dec.c}};
}

int emit_analyze_verdict(const Verdict& v, const HVector& h, const CharAssumption& chr,
                         bool json_mode, const std::string& cert_path, bool show_witnesses,
                         std::ostream& out) {
    Certificate cert;
    if (v.certificate) {
        cert = *v.certificate;
    } else {
        cert.h = h;
        cert.chr = chr;
        cert.socle = SocleType::gorenstein();
        cert.verdict = v.tag;
        cert.conclusion = "no admissible decomposition was excluded; the analysis is inconclusive "
                          "(the prover never asserts that a Gorenstein algebra exists)";
    }
    if (!cert_path.empty()) {
        std::ofstream f(cert_path);
        if (!f) throw std::runtime_error("cannot write certificate file '" + cert_path + "'");
        f << certificate_to_json(cert) << "\n";
    }
    if (json_mode) {
        json j = json::parse(certificate_to_json(cert));
        if (show_witnesses) {
            j["witnesses"] = json::array();
            for (const auto& w : v.witnesses) j["witnesses"].push_back(witness_json(w));
            j["witness_budget_exceeded"] = v.witness_budget_exceeded;
        }
        out << j.dump(2) << "\n";
    } else {
        out << (v.tag == VerdictTag::NotGorenstein ? "NOT GORENSTEIN" : "INCONCLUSIVE") << "\n";
        out << "h = " << h.to_string() << "  (char " << chr.to_string() << ")\n";
        for (const auto& step : cert.steps)
            out << "  " << rule_name(step.rule) << " @ degree " << step.degree << " [" << step.target
                << "]: [" << step.before.lo << "," << step.before.hi << "] -> [" << step.after.lo
                << "," << step.after.hi << "]  (" << step.detail << ")\n";
        if (!cert.conclusion.empty()) out << "conclusion: " << cert.conclusion << "\n";
        if (show_witnesses) {
            if (v.witness_budget_exceeded)
                out << "witnesses: enumeration budget exceeded\n";
            for (const auto& w : v.witnesses)
                out << "witness: b = " << join_ll(w.b) << "  c = " << join_ll(w.c) << "\n";
        }
    }
    return v.tag == VerdictTag::NotGorenstein ? kExitOk : kExitUndecided;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Hilbert-function bounds, Stanley-split certificates and quotient-algebra "
                 "oracles for level and Gorenstein artinian algebras"};
    app.name("macgreen");
    app.require_subcommand(0, 1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit machine-readable JSON");

    // expand N D
    auto* cmd_expand = app.add_subcommand("expand", "binomial expansion of N at level D");
    long long expand_n = 0;
    int expand_d = 0;
    cmd_expand->add_option("N", expand_n, "positive integer to expand")->required();
    cmd_expand->add_option("D", expand_d, "expansion level (positive)")->required();

    // bound --kind macaulay|green|h2-lower A B
    auto* cmd_bound = app.add_subcommand("bound", "evaluate a growth/restriction bound");
    std::string bound_kind;
    std::vector<long long> bound_args;
    cmd_bound->add_option("--kind", bound_kind, "macaulay | green | h2-lower")->required();
    cmd_bound->add_option("ARGS", bound_args, "two integers: N D (or R E for h2-lower)")
        ->expected(2)
        ->required();

    // check "1,10,9,10,1"
    auto* cmd_check = app.add_subcommand("check", "O-sequence / symmetry report for an h-vector");
    std::string check_h;
    cmd_check->add_option("H", check_h, "comma-separated h-vector")->required();

    // analyze
    auto* cmd_analyze = app.add_subcommand("analyze", "Gorenstein obstruction analysis");
    std::string analyze_h, analyze_char, analyze_cert, analyze_family;
    bool analyze_witnesses = false, footnote_gate = false;
    long long analyze_mmax = 10;
    cmd_analyze->add_option("H", analyze_h, "comma-separated h-vector");
    cmd_analyze->add_option("--char", analyze_char,
                            "zero | not-two | at-least:P | exactly:P | arbitrary");
    cmd_analyze->add_option("--certificate", analyze_cert, "write the certificate JSON here");
    cmd_analyze->add_flag("--witnesses", analyze_witnesses,
                          "list admissible decompositions when inconclusive");
    cmd_analyze->add_option("--family", analyze_family,
                            "batch mode: socle4 (char not-two) | socle5-codim14 (char zero)");
    cmd_analyze->add_option("--m-max", analyze_mmax, "largest m for --family socle4");
    cmd_analyze->add_flag("--footnote-char-gate", footnote_gate,
                          "gate plane-curve rigidity by char >= m instead of char > d+1");

    // wlp
    auto* cmd_wlp = app.add_subcommand("wlp", "forced weak-Lefschetz deductions");
    std::string wlp_h, wlp_char, wlp_socle;
    cmd_wlp->add_option("H", wlp_h, "comma-separated h-vector")->required();
    cmd_wlp->add_option("--socle", wlp_socle, "level | gorenstein")->required();
    cmd_wlp->add_option("--char", wlp_char, "characteristic assumption")->required();

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "classify symmetric candidates (r, e)");
    long long enum_r = 0, enum_budget = 200000;
    int enum_e = 0;
    std::string enum_char;
    cmd_enum->add_option("--codim", enum_r, "codimension h_1")->required();
    cmd_enum->add_option("--socle-degree", enum_e, "socle degree e")->required();
    cmd_enum->add_option("--char", enum_char, "characteristic assumption")->required();
    cmd_enum->add_option("--budget", enum_budget, "search budget");

    // oracle ...
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force quotient-algebra ground truth");
    cmd_oracle->require_subcommand(1);

    auto* orc_algebra = cmd_oracle->add_subcommand("algebra", "monomial quotient algebra report");
    std::string orc_ideal;
    int orc_vars = 0, orc_trials = 20, orc_cap = 32;
    long long orc_char = 0;
    unsigned long long orc_seed = 42;
    bool orc_wlp = false, orc_restrict = false;
    orc_algebra->add_option("--ideal", orc_ideal, "e.g. \"x^2, y^2, z^2\"")->required();
    orc_algebra->add_option("--vars", orc_vars, "number of variables (default: inferred)");
    orc_algebra->add_option("--char", orc_char, "0 (rationals) or a prime");
    orc_algebra->add_flag("--wlp", orc_wlp, "run the weak-Lefschetz rank test");
    orc_algebra->add_option("--trials", orc_trials, "random linear forms to sample");
    orc_algebra->add_option("--seed", orc_seed, "random seed");
    orc_algebra->add_flag("--restrict", orc_restrict,
                          "compare restriction dimensions against the Green caps");
    orc_algebra->add_option("--cap", orc_cap, "degree cap for non-artinian ideals");

    auto* orc_lex = cmd_oracle->add_subcommand("lex", "lex-segment growth count");
    long long lex_n = 0;
    int lex_d = 0, lex_r = 0;
    orc_lex->add_option("N", lex_n, "standard monomials in degree D")->required();
    orc_lex->add_option("D", lex_d, "degree")->required();
    orc_lex->add_option("R", lex_r, "variables")->required();

    auto* orc_charp = cmd_oracle->add_subcommand("charp", "characteristic-p restriction collapse");
    long long charp_p = 0;
    int charp_d = 0, charp_gdeg = 0, charp_forms = 20;
    unsigned long long charp_seed = 42;
    orc_charp->add_option("-p,--prime", charp_p, "characteristic p")->required();
    orc_charp->add_option("-d,--degree", charp_d, "span degree d = p + deg G")->required();
    orc_charp->add_option("--gdeg", charp_gdeg, "degree of the random factor G");
    orc_charp->add_option("--seed", charp_seed, "random seed");
    orc_charp->add_option("--forms", charp_forms, "number of random hyperplanes");

    auto* orc_split = cmd_oracle->add_subcommand("split", "observed Stanley split h = b + c");
    std::string split_ideal, split_var;
    int split_vars = 0;
    long long split_char = 0;
    orc_split->add_option("--ideal", split_ideal, "monomial ideal")->required();
    orc_split->add_option("--vars", split_vars, "number of variables (default: inferred)");
    orc_split->add_option("--var", split_var, "variable to split along, e.g. z")->required();
    orc_split->add_option("--char", split_char, "0 (rationals) or a prime");

    try {
        std::vector<const char*> argv;
        argv.push_back("macgreen");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (app.got_subcommand(cmd_expand)) {
            const BinomialExpansion e = expand(expand_n, expand_d);
            if (json_mode) {
                json terms = json::array();
                for (const auto& t : e.terms) terms.push_back({bigint_json(t.top), t.level});
                out << json{{"n", expand_n}, {"level", expand_d}, {"terms", terms}}.dump() << "\n";
            } else {
                out << expand_n << " = " << e.to_string() << "\n";
            }
            return kExitOk;
        }

        if (app.got_subcommand(cmd_bound)) {
            const long long a = bound_args[0];
            const long long b = bound_args[1];
            BigInt value;
            if (bound_kind == "macaulay") {
                if (a < 1 || b < 1) throw std::invalid_argument("macaulay bound needs n >= 1, d >= 1");
                value = macaulay_bound(a, static_cast<int>(b));
            } else if (bound_kind == "green") {
                if (a < 1 || b < 1) throw std::invalid_argument("green bound needs n >= 1, d >= 1");
                value = green_bound(a, static_cast<int>(b));
            } else if (bound_kind == "h2-lower") {
                value = h2_lower_bound(a, static_cast<int>(b));
            } else {
                throw std::invalid_argument("unknown bound kind '" + bound_kind +
                                            "' (want macaulay | green | h2-lower)");
            }
            if (json_mode)
                out << json{{"kind", bound_kind}, {"args", bound_args}, {"value", bigint_json(value)}}
                           .dump()
                    << "\n";
            else
                out << value << "\n";
            return kExitOk;
        }

        if (app.got_subcommand(cmd_check)) {
            const HVector h = HVector::parse(check_h);
            const bool oseq = h.is_o_sequence();
            const bool sym = h.is_symmetric();
            if (json_mode) {
                out << json{{"h", h.entries()},
                            {"codimension", h.codimension()},
                            {"socle_degree", h.socle_degree()},
                            {"o_sequence", oseq},
                            {"symmetric", sym}}
                           .dump()
                    << "\n";
            } else {
                out << "h = " << h.to_string() << "\n";
                out << "codimension: " << h.codimension() << "\n";
                out << "socle degree: " << h.socle_degree() << "\n";
                out << "o-sequence: " << (oseq ? "yes" : "no") << "\n";
                out << "symmetric: " << (sym ? "yes" : "no") << "\n";
            }
            return kExitOk;
        }

        if (app.got_subcommand(cmd_analyze)) {
            AnalyzeOptions opts;
            opts.engine.plane_curve_footnote_gate = footnote_gate;
            if (!analyze_family.empty()) {
                FamilyReport report;
                if (analyze_family == "socle4") {
                    report = analyze_socle4_family(analyze_mmax, opts);
                } else if (analyze_family == "socle5-codim14") {
                    report = analyze_socle5_codim14(opts);
                } else {
                    throw std::invalid_argument("unknown family '" + analyze_family + "'");
                }
                if (json_mode) {
                    json entries = json::array();
                    for (const auto& ent : report.entries)
                        entries.push_back({{"param", ent.param},
                                           {"h", ent.h.entries()},
                                           {"verdict", verdict_name(ent.verdict.tag)}});
                    out << json{{"family", analyze_family},
                                {"entries", entries},
                                {"all_not_gorenstein", report.all_not_gorenstein}}
                               .dump(2)
                        << "\n";
                } else {
                    for (const auto& ent : report.entries)
                        out << "param " << ent.param << ": " << ent.h.to_string() << "  ->  "
                            << verdict_name(ent.verdict.tag) << "\n";
                    out << (report.all_not_gorenstein ? "all refuted" : "not all refuted") << "\n";
                }
                return report.all_not_gorenstein ? kExitOk : kExitUndecided;
            }
            if (analyze_h.empty() || analyze_char.empty())
                throw std::invalid_argument("analyze needs an h-vector and --char");
            const HVector h = HVector::parse(analyze_h);
            const CharAssumption chr = CharAssumption::parse(analyze_char);
            opts.want_witnesses = analyze_witnesses;
            const Verdict v = analyze_gorenstein(h, chr, opts);
            return emit_analyze_verdict(v, h, chr, json_mode, analyze_cert, analyze_witnesses, out);
        }

        if (app.got_subcommand(cmd_wlp)) {
            const HVector h = HVector::parse(wlp_h);
            const CharAssumption chr = CharAssumption::parse(wlp_char);
            SocleType socle;
            if (wlp_socle == "level")
                socle = SocleType::level();
            else if (wlp_socle == "gorenstein")
                socle = SocleType::gorenstein();
            else
                throw std::invalid_argument("--socle must be level or gorenstein");
            const Verdict v = wlp_analyze(h, socle, chr);
            if (json_mode) {
                if (v.certificate)
                    out << certificate_to_json(*v.certificate) << "\n";
                else
                    out << json{{"h", h.entries()},
                                {"char", chr.to_string()},
                                {"socle", wlp_socle},
                                {"verdict", verdict_name(v.tag)}}
                               .dump(2)
                        << "\n";
            } else {
                if (v.tag == VerdictTag::ForcedWLP)
                    out << "FORCED WLP (rule " << v.certificate->wlp_rule << ")\n"
                        << v.certificate->conclusion << "\n";
                else if (v.tag == VerdictTag::NotGorenstein)
                    out << "NOT REALIZABLE\n" << v.certificate->conclusion << "\n";
                else
                    out << "WLP UNKNOWN\n";
            }
            return v.tag == VerdictTag::WLPUnknown ? kExitUndecided : kExitOk;
        }

        if (app.got_subcommand(cmd_enum)) {
            const CharAssumption chr = CharAssumption::parse(enum_char);
            const CandidateReport report = enumerate_candidates(enum_r, enum_e, chr, enum_budget);
            if (report.budget_exceeded)
                throw std::runtime_error("enumeration budget exceeded; raise --budget");
            if (json_mode) {
                json rows = json::array();
                for (const auto& c : report.candidates)
                    rows.push_back({{"h", c.h.entries()}, {"label", candidate_label_name(c.label)}});
                out << json{{"codim", enum_r},
                            {"socle_degree", enum_e},
                            {"char", chr.to_string()},
                            {"candidates", rows},
                            {"counts",
                             {{"not-gorenstein", report.count_not_gorenstein},
                              {"inconclusive", report.count_inconclusive},
                              {"below-h2-bound", report.count_below_bound}}}}
                           .dump(2)
                    << "\n";
            } else {
                for (const auto& c : report.candidates)
                    out << c.h.to_string() << "  " << candidate_label_name(c.label) << "\n";
                out << "not-gorenstein: " << report.count_not_gorenstein
                    << ", inconclusive: " << report.count_inconclusive
                    << ", below-h2-bound: " << report.count_below_bound << "\n";
            }
            return kExitOk;
        }

        if (app.got_subcommand(cmd_oracle)) {
            if (cmd_oracle->got_subcommand(orc_algebra)) {
                if (orc_vars == 0) orc_vars = infer_vars(orc_ideal);
                const FieldSpec field =
                    orc_char == 0 ? FieldSpec::rationals() : FieldSpec::prime(orc_char);
                const QuotientAlgebra A(parse_ideal(orc_ideal, orc_vars), field, orc_cap);
                const HilbertResult hil = A.hilbert_function();
                json j;
                j["ideal"] = A.ideal().to_string();
                j["vars"] = orc_vars;
                j["field"] = field.to_string();
                j["hilbert"] = hil.h;
                j["artinian"] = hil.artinian;
                if (!json_mode) {
                    out << "ideal: " << A.ideal().to_string() << " in " << orc_vars
                        << " variables over " << field.to_string() << "\n";
                    out << "hilbert function: " << join_ll(hil.h)
                        << (hil.artinian ? " (artinian)" : " (NOT artinian: prefix up to cap)")
                        << "\n";
                }
                if (hil.artinian) {
                    const auto s = A.socle_vector();
                    bool level = true;
                    for (std::size_t i = 0; i + 1 < s.size(); ++i)
                        if (s[i] != 0) level = false;
                    j["socle"] = s;
                    j["level"] = level;
                    j["gorenstein"] = level && s.back() == 1;
                    if (!json_mode) {
                        out << "socle vector: " << join_ll(s) << "\n";
                        out << "socle type: "
                            << (level ? (s.back() == 1 ? "gorenstein" : "level (t = " +
                                                                            std::to_string(s.back()) +
                                                                            ")")
                                      : "not level")
                            << "\n";
                    }
                }
                if (orc_wlp) {
                    const WlpResult w = wlp_test(A, orc_trials, orc_seed);
                    j["wlp"] = w.has_wlp;
                    j["wlp_exhaustive"] = w.exhaustive;
                    j["wlp_candidates_tested"] = w.candidates_tested;
                    json table = json::array();
                    for (const auto& dr : w.best_ranks)
                        table.push_back({{"source_degree", dr.source_degree},
                                         {"achieved", dr.achieved},
                                         {"required", dr.required}});
                    j["wlp_ranks"] = table;
                    if (w.has_wlp) j["wlp_witness"] = w.witness.coeffs;
                    if (!json_mode) {
                        if (w.has_wlp) {
                            out << "wlp: yes, witness L = " << w.witness.to_string() << "\n";
                        } else {
                            out << "wlp: fails for all sampled forms ("
                                << (w.exhaustive ? "exhaustive over " + field.to_string() + ": "
                                                 : "Monte-Carlo: ")
                                << w.candidates_tested << " forms)\n";
                            for (const auto& dr : w.best_ranks)
                                out << "  degree " << dr.source_degree << " -> "
                                    << dr.source_degree + 1 << ": rank " << dr.achieved << " of "
                                    << dr.required << "\n";
                        }
                    }
                }
                if (orc_restrict) {
                    std::mt19937_64 gen(orc_seed);
                    const LinearForm L = random_linear_form(orc_vars, field, gen);
                    json rows = json::array();
                    if (!json_mode) out << "restriction by L = " << L.to_string() << ":\n";
                    const int top = hil.artinian ? static_cast<int>(hil.h.size()) - 1 : orc_cap;
                    for (int d = 1; d <= top; ++d) {
                        const long long hd =
                            d < static_cast<int>(hil.h.size()) ? hil.h[static_cast<std::size_t>(d)] : 0;
                        if (hd == 0) break;
                        const long long restricted = restriction_dimension(A, L, d);
                        const BigInt cap = green_bound(hd, d);
                        rows.push_back({{"degree", d},
                                        {"restricted", restricted},
                                        {"green_cap", bigint_json(cap)}});
                        if (!json_mode)
                            out << "  degree " << d << ": h'_d = " << restricted
                                << ", green cap = " << cap << "\n";
                    }
                    j["restriction"] = rows;
                }
                if (json_mode) out << j.dump(2) << "\n";
                return kExitOk;
            }
            if (cmd_oracle->got_subcommand(orc_lex)) {
                const long long g = lex_growth(lex_n, lex_d, lex_r);
                if (json_mode)
                    out << json{{"n", lex_n}, {"d", lex_d}, {"r", lex_r}, {"growth", g}}.dump()
                        << "\n";
                else
                    out << g << "\n";
                return kExitOk;
            }
            if (cmd_oracle->got_subcommand(orc_charp)) {
                const CharpReport rep =
                    charp_theorem4_counterexample(charp_p, charp_d, charp_gdeg, charp_seed,
                                                  charp_forms);
                if (json_mode) {
                    json samples = json::array();
                    for (const auto& s : rep.samples)
                        samples.push_back({{"H", s.h.coeffs}, {"codim_wh", s.codim_wh}});
                    out << json{{"p", rep.p},
                                {"d", rep.d},
                                {"g_degree", rep.g_degree},
                                {"G", rep.g_text},
                                {"dim_w", rep.dim_w},
                                {"codim_w", rep.codim_w},
                                {"expected_codim_w", rep.expected_codim_w},
                                {"expected_codim_wh", rep.expected_codim_wh},
                                {"samples", samples},
                                {"degenerate_resamples", rep.degenerate_resamples},
                                {"all_match", rep.all_match}}
                               .dump(2)
                        << "\n";
                } else {
                    out << "p = " << rep.p << ", d = " << rep.d << ", deg G = " << rep.g_degree
                        << ", G = " << rep.g_text << "\n";
                    out << "codim W = " << rep.codim_w << " (expected " << rep.expected_codim_w
                        << ")\n";
                    out << "codim W_H over " << rep.samples.size()
                        << " random forms: expected " << rep.expected_codim_wh << ", got";
                    for (const auto& s : rep.samples) out << " " << s.codim_wh;
                    out << "\n";
                    out << (rep.all_match ? "all samples match" : "MISMATCH") << "\n";
                }
                return rep.all_match ? kExitOk : kExitUndecided;
            }
            if (cmd_oracle->got_subcommand(orc_split)) {
                if (split_vars == 0) split_vars = infer_vars(split_ideal);
                const FieldSpec field =
                    split_char == 0 ? FieldSpec::rationals() : FieldSpec::prime(split_char);
                const QuotientAlgebra A(parse_ideal(split_ideal, split_vars), field);
                LinearForm L;
                L.coeffs.assign(split_vars, 0);
                L.coeffs[static_cast<std::size_t>(parse_var_name(split_var, split_vars))] = 1;
                const StanleySplit split = stanley_split(A, L);
                const HilbertResult hil = A.hilbert_function();
                if (json_mode) {
                    out << json{{"h", hil.h},
                                {"b", split.b},
                                {"c", split.c},
                                {"sums_match", split.sums_match},
                                {"exact_colon", split.exact_colon}}
                               .dump(2)
                        << "\n";
                } else {
                    out << "h = " << join_ll(hil.h) << "\n";
                    out << "b = " << join_ll(split.b)
                        << (split.exact_colon ? " (colon route: exact)" : " (rank route)") << "\n";
                    out << "c = " << join_ll(split.c) << "\n";
                    out << "h = b + c: " << (split.sums_match ? "ok" : "MISMATCH") << "\n";
                }
                return split.sums_match ? kExitOk : kExitError;
            }
        }

        out << app.help();
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace macgreen
