#ifndef MACGREEN_ORACLE_HPP
#define MACGREEN_ORACLE_HPP

#include "macgreen/binomial.hpp"

#include <map>
#include <random>
#include <string>
#include <vector>

namespace macgreen {

/// Coefficient field: the rationals (characteristic 0) or a prime field F_p.
/// Prime fields are a stand-in for the infinite fields the theory assumes;
/// success witnesses are exact, failure claims are Monte-Carlo unless the
/// form space was exhausted.
struct FieldSpec {
    long long characteristic = 0;

    static FieldSpec rationals() { return {0}; }
    static FieldSpec prime(long long p);

    bool is_prime_field() const { return characteristic > 0; }
    std::string to_string() const;
};

/// A monomial as its exponent vector.
struct Monomial {
    std::vector<int> exps;

    int degree() const;
    bool divides(const Monomial& other) const;
    Monomial times_var(int v) const;
    Monomial div_var(int v) const;  // requires exps[v] > 0

    auto operator<=>(const Monomial&) const = default;
};

/// A monomial ideal held by its minimal generators.
class MonomialIdeal {
  public:
    MonomialIdeal(int nvars, std::vector<Monomial> gens);

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool contains(const Monomial& m) const;
    /// Contains a pure power of every variable, i.e. the quotient is artinian.
    bool is_artinian() const;

    MonomialIdeal plus_variable(int v) const;   // I + (x_v)
    MonomialIdeal colon_variable(int v) const;  // I : x_v

    std::string to_string() const;

  private:
    int nvars_;
    std::vector<Monomial> gens_;  // minimal, sorted
};

/// Parses "x^2, y^2, z^2" or "x1^2*x2, x3^3". Variables are x,y,z,w or
/// x1..xr; '^' for powers; factors separated by '*' or whitespace.
MonomialIdeal parse_ideal(const std::string& text, int nvars);

struct HilbertResult {
    std::vector<long long> h;  // counts for degrees 0..(last listed)
    bool artinian = true;      // false when the counts never reached 0 by the cap
};

/// A monomial-ideal quotient R/I over a specified field.
class QuotientAlgebra {
  public:
    QuotientAlgebra(MonomialIdeal ideal, FieldSpec field, int degree_cap = 32);

    const MonomialIdeal& ideal() const { return ideal_; }
    const FieldSpec& field() const { return field_; }
    int nvars() const { return ideal_.nvars(); }
    int degree_cap() const { return cap_; }

    /// Standard monomials of degree d (those outside the ideal), in
    /// descending lexicographic order with x_1 > x_2 > ... > x_r.
    std::vector<Monomial> standard_monomials(int d) const;

    /// Per-degree standard-monomial counts. For an artinian ideal the list
    /// runs up to the socle degree; otherwise up to the cap, flagged.
    HilbertResult hilbert_function() const;

    /// s_i = number of degree-i standard monomials killed by every variable.
    /// Throws for non-artinian input.
    std::vector<long long> socle_vector() const;

  private:
    MonomialIdeal ideal_;
    FieldSpec field_;
    int cap_;
};

/// A nonzero linear form, by its coefficient vector.
struct LinearForm {
    std::vector<long long> coeffs;

    std::string to_string() const;
};

LinearForm random_linear_form(int nvars, const FieldSpec& field, std::mt19937_64& gen);

/// Exact rank of the multiplication map .L : A_d -> A_{d+1}.
long long multiplication_rank(const QuotientAlgebra& A, const LinearForm& L, int d);

/// Degree-d entry of the Hilbert function of R/(I,L):
/// h_d - rank(.L : A_{d-1} -> A_d). Requires d >= 1.
long long restriction_dimension(const QuotientAlgebra& A, const LinearForm& L, int d);

struct DegreeRank {
    int source_degree = 0;
    long long achieved = 0;
    long long required = 0;
};

struct WlpResult {
    bool has_wlp = false;
    LinearForm witness;                  // meaningful when has_wlp
    std::vector<DegreeRank> best_ranks;  // per-degree table for the best candidate
    long long candidates_tested = 0;
    bool exhaustive = false;  // every form (up to scalar) was tested
};

/// Samples `trials` random linear forms (the all-ones form is always
/// included) and reports a WLP witness, or the rank table of the best
/// failing candidate. Over a small prime field the form space is swept
/// exhaustively instead, making the negative answer a proof.
WlpResult wlp_test(const QuotientAlgebra& A, int trials, unsigned long long seed);

/// Lex-segment growth: take the n lex-smallest degree-d monomials in r
/// variables as the standard set S and count the degree-(d+1) monomials
/// all of whose variable quotients lie in S. Brute-force sharpness oracle
/// for the Macaulay bound.
long long lex_growth(const BigInt& n, int d, int r);

struct CharpSample {
    LinearForm h;
    long long codim_wh = 0;
};

struct CharpReport {
    long long p = 0;
    int d = 0;
    int g_degree = 0;
    std::string g_text;
    long long dim_w = 0;
    long long codim_w = 0;
    long long expected_codim_w = 0;
    long long expected_codim_wh = 0;
    std::vector<CharpSample> samples;
    int degenerate_resamples = 0;
    bool all_match = false;
};

/// Builds W = span(x^p G, y^p G, z^p G) in degree d = p + deg G over F_p,
/// then restricts modulo random linear forms. Verifies
/// codim W = C(d+2,2) - 3 and codim W_H = d - 1 for every sampled H.
CharpReport charp_theorem4_counterexample(long long p, int d, int g_degree,
                                          unsigned long long seed, int num_forms = 20);

struct StanleySplit {
    std::vector<long long> b;  // shifted colon h-vector, b_0 = 0
    std::vector<long long> c;  // restriction h-vector
    bool sums_match = false;
    bool exact_colon = false;  // computed via the colon ideal (variable L)
};

/// Splits h(A) as b + c along the exact sequence
/// 0 -> R/(I:L)(-1) -> R/I -> R/(I,L) -> 0. For a variable L the colon
/// ideal is computed exactly; otherwise c comes from restriction ranks
/// and b = h - c.
StanleySplit stanley_split(const QuotientAlgebra& A, const LinearForm& L);

/// Exact rank of an integer matrix (over the rationals). Fraction-free
/// Gaussian elimination; a prime-field pre-pass may certify full rank.
long long rank_char0(std::vector<std::vector<long long>> M);

/// Rank over F_p.
long long rank_modp(std::vector<std::vector<long long>> M, long long p);

}  // namespace macgreen

#endif  // MACGREEN_ORACLE_HPP
