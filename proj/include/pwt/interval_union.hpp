#pragma once

#include <vector>

#include "pwt/rational.hpp"

namespace pwt {

/// Closed interval [lo, hi], lo <= hi. Degenerate single points are allowed;
/// images of compact sets may be points and we keep compact-set semantics.
struct Interval1 {
    Rational lo;
    Rational hi;
    bool operator==(const Interval1&) const = default;
    Rational length() const { return hi - lo; }
};

/// Finite union of disjoint, non-touching closed intervals, sorted by lo.
/// Canonical: for consecutive parts, hi_k < lo_{k+1} (touching parts merge
/// at construction). The empty sequence is the empty set.
class IntervalUnion {
public:
    IntervalUnion() = default;

    const std::vector<Interval1>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    bool operator==(const IntervalUnion&) const = default;

    bool contains(const Rational& x) const;
    bool subset_of(const IntervalUnion& other) const;
    IntervalUnion translated(const Rational& v) const;
    Rational length() const;

    friend IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b);
    friend IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);
    friend IntervalUnion normalize(std::vector<Interval1> parts);

private:
    std::vector<Interval1> parts_;
};

/// Canonical form of an arbitrary list of intervals. Throws ValidationError
/// if any part has lo > hi.
IntervalUnion normalize(std::vector<Interval1> parts);

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion intersect(const IntervalUnion& a, const Interval1& b);

inline Rational total_length(const IntervalUnion& u) { return u.length(); }

std::string to_string(const IntervalUnion& u);

}  // namespace pwt
