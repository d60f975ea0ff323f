#include "macgreen/binomial.hpp"

#include <sstream>
#include <stdexcept>

namespace macgreen {

BigInt binom(const BigInt& n, const BigInt& k) {
    if (k < 0 || n < k) return 0;
    // Multiply over the shorter side of the symmetry.
    BigInt kk = k;
    if (n - k < kk) kk = n - k;
    BigInt result = 1;
    for (BigInt t = 1; t <= kk; ++t) {
        result *= n - kk + t;
        result /= t;  // exact: result is C(n-kk+t, t) after this step
    }
    return result;
}

BigInt BinomialExpansion::value() const {
    BigInt sum = 0;
    for (const auto& t : terms) sum += binom(t.top, t.level);
    return sum;
}

bool BinomialExpansion::valid() const {
    if (terms.empty()) return false;
    if (terms.front().level != top_degree) return false;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& t = terms[k];
        if (t.level != top_degree - static_cast<int>(k)) return false;
        if (t.level < 1) return false;
        if (t.top < t.level) return false;
        if (k > 0 && !(terms[k - 1].top > t.top)) return false;
    }
    return true;
}

std::string BinomialExpansion::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k) os << " + ";
        os << "C(" << terms[k].top << "," << terms[k].level << ")";
    }
    return os.str();
}

BinomialExpansion expand(const BigInt& n, int i) {
    if (n < 1) throw std::invalid_argument("expand: n must be positive");
    if (i < 1) throw std::invalid_argument("expand: level must be positive");
    BinomialExpansion e;
    e.top_degree = i;
    BigInt rest = n;
    for (int level = i; level >= 1 && rest > 0; --level) {
        // Largest top with C(top, level) <= rest. C(level, level) = 1 <= rest,
        // so the search range is never empty.
        BigInt lo = level, hi = level + 1;
        while (binom(hi, level) <= rest) {
            lo = hi;
            hi *= 2;
        }
        while (lo + 1 < hi) {
            BigInt mid = (lo + hi) / 2;
            if (binom(mid, level) <= rest)
                lo = mid;
            else
                hi = mid;
        }
        e.terms.push_back({lo, level});
        rest -= binom(lo, level);
    }
    return e;
}

BigInt eval_offset(const BinomialExpansion& e, const OffsetPair& o) {
    BigInt sum = 0;
    for (const auto& t : e.terms) sum += binom(t.top + o.b, BigInt(t.level) + o.a);
    return sum;
}

BigInt macaulay_bound(const BigInt& n, int d) {
    if (n == 0) return 0;
    return eval_offset(expand(n, d), {1, 1});
}

BigInt green_bound(const BigInt& n, int d) {
    if (n == 0) return 0;
    return eval_offset(expand(n, d), {0, -1});
}

BigInt h2_lower_bound(const BigInt& r, int e) {
    if (r < 1) throw std::invalid_argument("h2_lower_bound: r must be positive");
    if (e < 2) throw std::invalid_argument("h2_lower_bound: socle degree must be >= 2");
    const BinomialExpansion x = expand(r, e - 1);
    return eval_offset(x, {-1, -1}) + eval_offset(x, {-(e - 3), -(e - 2)});
}

}  // namespace macgreen
