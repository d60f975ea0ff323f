#ifndef MACGREEN_HVECTOR_HPP
#define MACGREEN_HVECTOR_HPP

#include "macgreen/binomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace macgreen {

/// The h-vector (h_0, ..., h_e) of a standard graded artinian algebra:
/// h_0 = 1, every entry positive, e >= 1. Immutable after construction.
class HVector {
  public:
    HVector() : entries_{1, 1} {}  // the minimal valid h-vector
    explicit HVector(std::vector<long long> entries);

    /// Parses "1,10,9,10,1" (spaces allowed around commas).
    static HVector parse(const std::string& csv);
    /// Parses the JSON object {"h":[1,10,9,10,1]}.
    static HVector parse_json(const std::string& json_text);

    const std::vector<long long>& entries() const { return entries_; }
    long long operator[](std::size_t i) const { return entries_[i]; }
    std::size_t size() const { return entries_.size(); }

    int socle_degree() const { return static_cast<int>(entries_.size()) - 1; }
    long long codimension() const { return entries_[1]; }

    /// Macaulay admissibility: h_{d+1} <= ((h_d)_(d))_1^1 for every d >= 1.
    bool is_o_sequence() const;
    /// h_i = h_{e-i} for all i.
    bool is_symmetric() const;

    std::string to_string() const;   // "1,10,9,10,1"
    std::string to_json() const;     // {"h":[1,10,9,10,1]}

    bool operator==(const HVector&) const = default;

  private:
    std::vector<long long> entries_;
};

/// Socle hypothesis attached to an analysis.
struct SocleType {
    enum class Tag { Level, Gorenstein, ZeroSocleBelow, Unspecified };
    Tag tag = Tag::Unspecified;
    int below_degree = 0;  // for ZeroSocleBelow(d): zero socle in degrees <= d-1

    static SocleType level() { return {Tag::Level, 0}; }
    static SocleType gorenstein() { return {Tag::Gorenstein, 0}; }
    static SocleType zero_socle_below(int d) { return {Tag::ZeroSocleBelow, d}; }
    static SocleType unspecified() { return {Tag::Unspecified, 0}; }

    bool is_level() const { return tag == Tag::Level || tag == Tag::Gorenstein; }
    bool is_gorenstein() const { return tag == Tag::Gorenstein; }

    /// True when the hypothesis guarantees zero socle in all degrees <= d-1.
    /// Level and Gorenstein algebras of socle degree e satisfy this for
    /// every d <= e.
    bool zero_socle_below_degree(int d, int socle_degree) const;
};

/// What is assumed about the characteristic of the base field.
struct CharAssumption {
    enum class Kind { Zero, NotTwo, AtLeast, Exactly, Arbitrary };
    Kind kind = Kind::Arbitrary;
    long long p = 0;  // for AtLeast / Exactly

    static CharAssumption zero() { return {Kind::Zero, 0}; }
    static CharAssumption not_two() { return {Kind::NotTwo, 0}; }
    static CharAssumption at_least(long long p) { return {Kind::AtLeast, p}; }
    static CharAssumption exactly(long long p) { return {Kind::Exactly, p}; }
    static CharAssumption arbitrary() { return {Kind::Arbitrary, 0}; }

    /// Does the assumption guarantee char != 2?
    bool excludes_two() const;
    /// Does it guarantee char = 0 or char > bound?
    bool zero_or_greater_than(long long bound) const;
    /// Does it guarantee char = 0 or char >= bound, and char != 2?
    bool zero_or_at_least_excluding_two(long long bound) const;

    /// Tags: "zero", "not-two", "at-least:P", "exactly:P", "arbitrary".
    static CharAssumption parse(const std::string& tag);
    std::string to_string() const;

    bool operator==(const CharAssumption&) const = default;
};

/// The symmetric 5-entry family (1, C(m+3,3), (m+1)^2, C(m+3,3), 1).
/// Requires m >= 2.
HVector family_gorenstein_gap(long long m);

/// If n = C(m+d, d) for a (unique) positive m, returns m.
std::optional<long long> binomial_shape(const BigInt& n, int d);

/// If n = C(d+2,2) - C(d-m+2,2) = m*d + 1 - C(m-1,2) for some 1 <= m <= d,
/// returns m. Both closed forms are checked.
std::optional<long long> plane_curve_shape(const BigInt& n, int d);

/// Degree-by-degree Hilbert function of a degree-m plane curve, up to
/// degree d: h_i = C(i+2,2) - C(i-m+2,2) for i = 0..d. Requires 1 <= m <= d.
HVector plane_curve_prefix(long long m, int d);

}  // namespace macgreen

#endif  // MACGREEN_HVECTOR_HPP
