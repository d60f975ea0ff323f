#ifndef MACGREEN_BINOMIAL_HPP
#define MACGREEN_BINOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace macgreen {

using BigInt = boost::multiprecision::cpp_int;

/// C(n,k) under the clamping convention: 0 whenever k < 0 or n < k.
/// Total over all integers; exact, arbitrary precision.
BigInt binom(const BigInt& n, const BigInt& k);

/// One term C(top, level) of a binomial expansion.
struct BinomialTerm {
    BigInt top;
    int level;

    bool operator==(const BinomialTerm&) const = default;
};

/// The unique Macaulay representation of a positive integer n at level i:
///   n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)
/// with n_i > n_{i-1} > ... > n_j >= j >= 1 and consecutive levels.
struct BinomialExpansion {
    int top_degree = 0;               // the i of n_(i)
    std::vector<BinomialTerm> terms;  // levels i, i-1, ..., j_min

    /// Sum of the terms; reconstructs the expanded integer.
    BigInt value() const;

    /// Checks the structural invariants (consecutive levels, strictly
    /// decreasing tops, top >= level for every term).
    bool valid() const;

    std::string to_string() const;  // e.g. "C(5,4) + C(4,3) + C(3,2) + C(2,1)"
};

/// Offset pair for the operator (n_(i))_a^b: a is added to the lower
/// indices, b to the upper ones. Evaluation clamps each term to zero.
struct OffsetPair {
    long long a = 0;
    long long b = 0;
};

/// Computes the i-binomial expansion of n. Greedy descent; each top found
/// by binary search. Throws std::invalid_argument for n < 1 or i < 1.
BinomialExpansion expand(const BigInt& n, int i);

/// (n_(i))_a^b = sum_j C(n_j + b, j + a), term-wise clamped.
BigInt eval_offset(const BinomialExpansion& e, const OffsetPair& o);

/// Macaulay growth bound ((n_(d))_1^1, the largest admissible next entry
/// of a Hilbert function whose degree-d entry is n. Extended to n = 0
/// with value 0.
BigInt macaulay_bound(const BigInt& n, int d);

/// Green restriction bound (n_(d))_0^{-1}: cap on the degree-d entry
/// after quotienting by a general linear form. Extended to n = 0 with
/// value 0.
BigInt green_bound(const BigInt& n, int d);

/// Lower bound for the second entry of a Gorenstein h-vector of
/// codimension r and socle degree e:
///   (r_(e-1))_{-1}^{-1} + (r_(e-1))_{-(e-3)}^{-(e-2)}.
/// Requires r >= 1 and e >= 2.
BigInt h2_lower_bound(const BigInt& r, int e);

}  // namespace macgreen

#endif  // MACGREEN_BINOMIAL_HPP
