#include "macgreen/hvector.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace macgreen {

HVector::HVector(std::vector<long long> entries) : entries_(std::move(entries)) {
    if (entries_.size() < 2)
        throw std::invalid_argument("h-vector needs at least two entries (socle degree >= 1)");
    if (entries_.front() != 1)
        throw std::invalid_argument("h-vector must start with h_0 = 1");
    for (long long v : entries_)
        if (v < 1) throw std::invalid_argument("h-vector entries must be positive");
}

HVector HVector::parse(const std::string& csv) {
    std::vector<long long> vals;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("h-vector entry is not an integer: '" + item + "'");
        }
        while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
        if (pos != item.size())
            throw std::invalid_argument("h-vector entry is not an integer: '" + item + "'");
        vals.push_back(v);
    }
    return HVector(std::move(vals));
}

HVector HVector::parse_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.is_object() || !j.contains("h") || !j["h"].is_array())
        throw std::invalid_argument("expected a JSON object {\"h\":[...]}");
    std::vector<long long> vals;
    for (const auto& v : j["h"]) vals.push_back(v.get<long long>());
    return HVector(std::move(vals));
}

bool HVector::is_o_sequence() const {
    for (std::size_t d = 1; d + 1 < entries_.size(); ++d)
        if (BigInt(entries_[d + 1]) > macaulay_bound(entries_[d], static_cast<int>(d)))
            return false;
    return true;
}

bool HVector::is_symmetric() const {
    std::size_t e = entries_.size() - 1;
    for (std::size_t i = 0; 2 * i <= e; ++i)
        if (entries_[i] != entries_[e - i]) return false;
    return true;
}

std::string HVector::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ",";
        os << entries_[i];
    }
    return os.str();
}

std::string HVector::to_json() const {
    nlohmann::json j;
    j["h"] = entries_;
    return j.dump();
}

bool SocleType::zero_socle_below_degree(int d, int socle_degree) const {
    switch (tag) {
        case Tag::Level:
        case Tag::Gorenstein:
            return d <= socle_degree;
        case Tag::ZeroSocleBelow:
            return d <= below_degree;
        case Tag::Unspecified:
            return false;
    }
    return false;
}

bool CharAssumption::excludes_two() const {
    switch (kind) {
        case Kind::Zero:
        case Kind::NotTwo:
            return true;
        case Kind::AtLeast:
            return p >= 3;
        case Kind::Exactly:
            return p != 2;
        case Kind::Arbitrary:
            return false;
    }
    return false;
}

bool CharAssumption::zero_or_greater_than(long long bound) const {
    switch (kind) {
        case Kind::Zero:
            return true;
        case Kind::NotTwo:
            // char is 0 or an odd prime, so at least 3.
            return bound < 3;
        case Kind::AtLeast:
            return p > bound;
        case Kind::Exactly:
            return p > bound;
        case Kind::Arbitrary:
            return false;
    }
    return false;
}

bool CharAssumption::zero_or_at_least_excluding_two(long long bound) const {
    if (!excludes_two()) return false;
    switch (kind) {
        case Kind::Zero:
            return true;
        case Kind::NotTwo:
            return bound <= 3;
        case Kind::AtLeast:
        case Kind::Exactly:
            return p >= bound;
        case Kind::Arbitrary:
            return false;
    }
    return false;
}

CharAssumption CharAssumption::parse(const std::string& tag) {
    if (tag == "zero" || tag == "0") return zero();
    if (tag == "not-two") return not_two();
    if (tag == "arbitrary" || tag == "any") return arbitrary();
    auto parse_p = [&](const std::string& body) {
        std::size_t pos = 0;
        long long p = std::stoll(body, &pos);
        if (pos != body.size() || p < 2)
            throw std::invalid_argument("invalid characteristic value in '" + tag + "'");
        return p;
    };
    if (tag.rfind("at-least:", 0) == 0) return at_least(parse_p(tag.substr(9)));
    if (tag.rfind("exactly:", 0) == 0) {
        long long p = parse_p(tag.substr(8));
        // crude primality check; desk-scale values only
        for (long long q = 2; q * q <= p; ++q)
            if (p % q == 0) throw std::invalid_argument("exactly:P requires prime P");
        return exactly(p);
    }
    throw std::invalid_argument("unknown characteristic tag '" + tag +
                                "' (want zero|not-two|at-least:P|exactly:P|arbitrary)");
}

std::string CharAssumption::to_string() const {
    switch (kind) {
        case Kind::Zero:
            return "zero";
        case Kind::NotTwo:
            return "not-two";
        case Kind::AtLeast:
            return "at-least:" + std::to_string(p);
        case Kind::Exactly:
            return "exactly:" + std::to_string(p);
        case Kind::Arbitrary:
            return "arbitrary";
    }
    return "arbitrary";
}

HVector family_gorenstein_gap(long long m) {
    if (m < 2) throw std::invalid_argument("family_gorenstein_gap requires m >= 2");
    long long r = static_cast<long long>(binom(m + 3, 3));
    return HVector({1, r, (m + 1) * (m + 1), r, 1});
}

std::optional<long long> binomial_shape(const BigInt& n, int d) {
    if (n < 1 || d < 1) return std::nullopt;
    // C(m+d, d) is strictly increasing in m; binary search m in [1, hi].
    BigInt lo = 1, hi = 2;
    while (binom(hi + d, d) < n) hi *= 2;
    if (binom(lo + d, d) > n) return std::nullopt;
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (binom(mid + d, d) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    if (binom(lo + d, d) == n) return static_cast<long long>(lo);
    return std::nullopt;
}

std::optional<long long> plane_curve_shape(const BigInt& n, int d) {
    if (n < 1 || d < 1) return std::nullopt;
    // C(d+2,2) - C(d-m+2,2) is strictly increasing in m on [1, d].
    long long lo = 1, hi = d;
    if (n < binom(d + 2, 2) - binom(d - 1 + 2, 2)) return std::nullopt;
    if (n > binom(d + 2, 2) - 1) return std::nullopt;
    while (lo < hi) {
        long long mid = (lo + hi + 1) / 2;
        if (binom(d + 2, 2) - binom(d - mid + 2, 2) <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    long long m = lo;
    if (binom(d + 2, 2) - binom(d - m + 2, 2) != n) return std::nullopt;
    // The two closed forms must agree: n = m*d + 1 - C(m-1,2).
    if (BigInt(m) * d + 1 - binom(m - 1, 2) != n)
        throw std::logic_error("plane_curve_shape: closed forms disagree");
    return m;
}

HVector plane_curve_prefix(long long m, int d) {
    if (m < 1 || m > d) throw std::invalid_argument("plane_curve_prefix requires 1 <= m <= d");
    std::vector<long long> vals;
    for (int i = 0; i <= d; ++i)
        vals.push_back(static_cast<long long>(binom(i + 2, 2) - binom(i - m + 2, 2)));
    return HVector(std::move(vals));
}

}  // namespace macgreen
