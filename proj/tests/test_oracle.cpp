#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macgreen/hvector.hpp"
#include "macgreen/oracle.hpp"

#include <sstream>

using namespace macgreen;

namespace {

QuotientAlgebra make_algebra(const std::string& ideal, int vars, long long p, int cap = 32) {
    return QuotientAlgebra(parse_ideal(ideal, vars),
                           p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p), cap);
}

}  // namespace

TEST_CASE("ideal parsing and minimal generators") {
    const MonomialIdeal I = parse_ideal("x^2, y^2, z^2", 3);
    CHECK(I.generators().size() == 3);
    CHECK(I.is_artinian());

    const MonomialIdeal J = parse_ideal("x^2, x^2*y, x^3", 3);
    CHECK(J.generators().size() == 1);  // x^2 divides the others

    const MonomialIdeal K = parse_ideal("x1^2*x2, x3^3", 3);
    CHECK(K.generators().size() == 2);
    CHECK_FALSE(K.is_artinian());

    CHECK(parse_ideal("x^2y", 2).generators()[0] == Monomial{{2, 1}});
    CHECK_THROWS_AS(parse_ideal("v^2", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_ideal("x5", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_ideal("", 3), std::invalid_argument);
}

TEST_CASE("hilbert functions") {
    CHECK(make_algebra("x^2, y^2, z^2", 3, 0).hilbert_function().h ==
          std::vector<long long>{1, 3, 3, 1});
    // standard monomials: {1; x, y; y^2}
    CHECK(make_algebra("x^2, x*y, y^3", 2, 0).hilbert_function().h ==
          std::vector<long long>{1, 2, 1});

    const QuotientAlgebra free2(MonomialIdeal(2, {Monomial{{5, 5}}}), FieldSpec::rationals(), 3);
    const HilbertResult res = free2.hilbert_function();
    CHECK_FALSE(res.artinian);
    CHECK(res.h == std::vector<long long>{1, 2, 3, 4});
}

TEST_CASE("socle vectors") {
    CHECK(make_algebra("x^2, y^2, z^2", 3, 0).socle_vector() ==
          std::vector<long long>{0, 0, 0, 1});
    CHECK(make_algebra("x^2, x*y, y^2", 2, 0).socle_vector() == std::vector<long long>{0, 2});
    CHECK(make_algebra("x^3, y^3, x*y", 2, 0).socle_vector() == std::vector<long long>{0, 0, 2});
    CHECK_THROWS_AS(make_algebra("x^2", 2, 0).socle_vector(), std::invalid_argument);
}

TEST_CASE("restriction dimensions") {
    // char 0, generic L: the three squares restrict onto the full quadric space
    const QuotientAlgebra A0 = make_algebra("x^2, y^2, z^2", 3, 0);
    const LinearForm L{{3, -7, 11}};
    CHECK(restriction_dimension(A0, L, 2) == 0);
    CHECK(green_bound(3, 2) == 1);

    // char 2: every linear form leaves a one-dimensional cokernel
    const QuotientAlgebra A2 = make_algebra("x^2, y^2, z^2", 3, 2);
    CHECK(restriction_dimension(A2, LinearForm{{1, 1, 1}}, 2) == 1);

    CHECK_THROWS_AS(restriction_dimension(A0, L, 0), std::invalid_argument);
}

TEST_CASE("lex-segment ideals attain the green bound under the last variable") {
    // ideal generated by the t lex-largest degree-2 monomials of k[x,y,z]
    const std::vector<std::string> lex2 = {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"};
    for (std::size_t t = 1; t <= 4; ++t) {
        std::ostringstream os;
        for (std::size_t i = 0; i < t; ++i) os << (i ? ", " : "") << lex2[i];
        const QuotientAlgebra A = make_algebra(os.str(), 3, 0, 9);
        const HilbertResult hil = A.hilbert_function();
        const LinearForm z_form{{0, 0, 1}};
        for (int d = 2; d <= 5; ++d) {
            const long long hd = d < static_cast<int>(hil.h.size()) ? hil.h[static_cast<std::size_t>(d)] : 0;
            if (hd == 0) break;
            CHECK(BigInt(restriction_dimension(A, z_form, d)) == green_bound(hd, d));
        }
    }
}

TEST_CASE("wlp rank tests") {
    // (1,3,3,1) over a big odd prime and over the rationals: WLP holds
    CHECK(wlp_test(make_algebra("x^2, y^2, z^2", 3, 101), 5, 42).has_wlp);
    CHECK(wlp_test(make_algebra("x^2, y^2, z^2", 3, 0), 5, 42).has_wlp);

    // char 2: fails for every one of the 7 projective forms, and the
    // middle map never exceeds rank 2
    const WlpResult w2 = wlp_test(make_algebra("x^2, y^2, z^2", 3, 2), 7, 42);
    CHECK_FALSE(w2.has_wlp);
    CHECK(w2.exhaustive);
    CHECK(w2.candidates_tested == 7);
    REQUIRE(w2.best_ranks.size() == 3);
    CHECK(w2.best_ranks[1].achieved <= 2);
    CHECK(w2.best_ranks[1].required == 3);

    // codimension-2 monomial complete intersection over the rationals
    CHECK(wlp_test(make_algebra("x^3, y^3", 2, 0), 5, 7).has_wlp);
}

TEST_CASE("wlp results are reproducible for a fixed seed") {
    const QuotientAlgebra A = make_algebra("x^3, y^2, z^2", 3, 13);
    const WlpResult a = wlp_test(A, 6, 99);
    const WlpResult b = wlp_test(A, 6, 99);
    CHECK(a.has_wlp == b.has_wlp);
    CHECK(a.witness.coeffs == b.witness.coeffs);
    CHECK(a.candidates_tested == b.candidates_tested);
    for (std::size_t i = 0; i < a.best_ranks.size(); ++i)
        CHECK(a.best_ranks[i].achieved == b.best_ranks[i].achieved);
}

TEST_CASE("lex growth oracle") {
    CHECK(lex_growth(9, 2, 5) == 16);
    CHECK(macaulay_bound(9, 2) == 16);
    for (int d = 1; d <= 4; ++d)
        for (int r = 2; r <= 5; ++r) CHECK(lex_growth(1, d, r) == 1);
    // the whole degree-d space in m+1 variables grows to the whole space
    for (long long m = 1; m <= 3; ++m)
        for (int d = 1; d <= 4; ++d)
            CHECK(lex_growth(binom(m + d, d), d, static_cast<int>(m) + 1) ==
                  binom(m + d + 1, d + 1));
    CHECK_THROWS_AS(lex_growth(7, 2, 2), std::invalid_argument);  // only 3 monomials exist
}

TEST_CASE("lex growth matches the macaulay bound in the unconstrained regime") {
    for (long long n = 1; n <= 200; ++n)
        for (int d = 1; d <= 4; ++d)
            CHECK(BigInt(lex_growth(n, d, static_cast<int>(n))) == macaulay_bound(n, d));
}

TEST_CASE("characteristic-p restriction collapse") {
    const CharpReport r1 = charp_theorem4_counterexample(2, 2, 0, 42, 20);
    CHECK(r1.codim_w == 3);
    CHECK(r1.expected_codim_w == 3);
    CHECK(r1.expected_codim_wh == 1);
    CHECK(r1.all_match);

    const CharpReport r2 = charp_theorem4_counterexample(3, 3, 0, 42, 20);
    CHECK(r2.codim_w == 7);  // C(5,2) - 3
    CHECK(r2.all_match);

    const CharpReport r3 = charp_theorem4_counterexample(2, 3, 1, 42, 20);
    CHECK(r3.codim_w == static_cast<long long>(binom(5, 2)) - 3);
    CHECK(r3.expected_codim_wh == 2);
    CHECK(r3.all_match);

    CHECK_THROWS_AS(charp_theorem4_counterexample(4, 4, 0, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(charp_theorem4_counterexample(3, 4, 0, 1, 5), std::invalid_argument);
}

TEST_CASE("stanley split along a variable") {
    const QuotientAlgebra A = make_algebra("x^2, y^2, z^2", 3, 0);
    const StanleySplit s = stanley_split(A, LinearForm{{0, 0, 1}});
    CHECK(s.exact_colon);
    CHECK(s.sums_match);
    CHECK(s.b == std::vector<long long>{0, 1, 2, 1});  // R/(x^2,y^2,z) shifted by one
    CHECK(s.c == std::vector<long long>{1, 2, 1, 0});  // R/(x^2,y^2,z^2,z)

    // b side of a Gorenstein monomial algebra is symmetric
    for (const char* ideal : {"x^2, y^2, z^2", "x^3, y^3, z^3"}) {
        const StanleySplit g = stanley_split(make_algebra(ideal, 3, 0), LinearForm{{0, 0, 1}});
        CHECK(g.sums_match);
        const std::size_t e = g.b.size() - 1;
        for (std::size_t i = 1; i <= e; ++i) CHECK(g.b[i] == g.b[e + 1 - i]);
    }
}

TEST_CASE("stanley split along a general form") {
    const QuotientAlgebra A = make_algebra("x^2, x*y, y^3, z^2", 3, 0);
    const StanleySplit s = stanley_split(A, LinearForm{{2, 3, 5}});
    CHECK_FALSE(s.exact_colon);
    CHECK(s.sums_match);  // exactness of the multiplication sequence
    CHECK(s.c[0] == 1);
}

TEST_CASE("oracle hilbert functions obey macaulay growth; socle tops match") {
    std::mt19937_64 gen(17);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Monomial> gens;
        for (int v = 0; v < 3; ++v) {  // pure powers keep the quotient artinian
            Monomial m{{0, 0, 0}};
            m.exps[static_cast<std::size_t>(v)] = 2 + static_cast<int>(gen() % 4);
            gens.push_back(m);
        }
        const int extra = static_cast<int>(gen() % 3);
        for (int k = 0; k < extra; ++k) {
            Monomial m{{static_cast<int>(gen() % 3), static_cast<int>(gen() % 3),
                        static_cast<int>(gen() % 3)}};
            if (m.degree() == 0) continue;
            gens.push_back(m);
        }
        const QuotientAlgebra A(MonomialIdeal(3, gens), FieldSpec::rationals());
        const HilbertResult hil = A.hilbert_function();
        REQUIRE(hil.artinian);
        if (hil.h.size() < 2) continue;
        CHECK(HVector(hil.h).is_o_sequence());
        const auto s = A.socle_vector();
        REQUIRE(s.size() == hil.h.size());
        CHECK(s.back() == hil.h.back());  // the top degree is all socle
        for (std::size_t i = 0; i < s.size(); ++i) CHECK(s[i] <= hil.h[i]);
    }
}

TEST_CASE("exact rank routines agree") {
    // a matrix whose rational rank drops: rows 2 and 3 sum to row 1
    const std::vector<std::vector<long long>> M = {
        {2, 4, 6}, {1, 1, 1}, {1, 3, 5}, {0, 0, 0}};
    CHECK(rank_char0(M) == 2);
    CHECK(rank_modp(M, 101) == 2);
    // a rank drop visible only over F_2
    const std::vector<std::vector<long long>> N = {{1, 1}, {1, -1}};
    CHECK(rank_char0(N) == 2);
    CHECK(rank_modp(N, 2) == 1);
}
