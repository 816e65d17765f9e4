#include "pwt/interval_union.hpp"

#include <algorithm>

#include "pwt/errors.hpp"

namespace pwt {

IntervalUnion normalize(std::vector<Interval1> parts) {
    for (const auto& p : parts) {
        if (p.lo > p.hi)
            throw ValidationError("Interval1: lo > hi (" + p.lo.to_string() + " > " +
                                  p.hi.to_string() + ")");
    }
    std::sort(parts.begin(), parts.end(), [](const Interval1& a, const Interval1& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        return a.hi < b.hi;
    });
    IntervalUnion out;
    for (auto& p : parts) {
        if (!out.parts_.empty() && p.lo <= out.parts_.back().hi) {
            if (p.hi > out.parts_.back().hi) out.parts_.back().hi = std::move(p.hi);
        } else {
            out.parts_.push_back(std::move(p));
        }
    }
    return out;
}

bool IntervalUnion::contains(const Rational& x) const {
    // Parts are sorted and disjoint; binary search by lo.
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](const Rational& v, const Interval1& p) { return v < p.lo; });
    if (it == parts_.begin()) return false;
    --it;
    return x <= it->hi;
}

bool IntervalUnion::subset_of(const IntervalUnion& other) const {
    // Each connected part must fit inside a single part of `other`.
    std::size_t j = 0;
    for (const auto& p : parts_) {
        while (j < other.parts_.size() && other.parts_[j].hi < p.lo) ++j;
        if (j == other.parts_.size()) return false;
        if (!(other.parts_[j].lo <= p.lo && p.hi <= other.parts_[j].hi)) return false;
    }
    return true;
}

IntervalUnion IntervalUnion::translated(const Rational& v) const {
    IntervalUnion out;
    out.parts_.reserve(parts_.size());
    for (const auto& p : parts_) out.parts_.push_back({p.lo + v, p.hi + v});
    return out;
}

Rational IntervalUnion::length() const {
    Rational sum;
    for (const auto& p : parts_) sum = sum + (p.hi - p.lo);
    return sum;
}

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b) {
    std::vector<Interval1> parts = a.parts_;
    parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
    return normalize(std::move(parts));
}

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
    IntervalUnion out;
    std::size_t i = 0, j = 0;
    while (i < a.parts_.size() && j < b.parts_.size()) {
        const Interval1& p = a.parts_[i];
        const Interval1& q = b.parts_[j];
        Rational lo = max(p.lo, q.lo);
        Rational hi = min(p.hi, q.hi);
        if (lo <= hi) out.parts_.push_back({std::move(lo), std::move(hi)});
        if (p.hi < q.hi)
            ++i;
        else
            ++j;
    }
    return out;  // pieces of disjoint unions stay sorted and non-touching
}

IntervalUnion intersect(const IntervalUnion& a, const Interval1& b) {
    std::vector<Interval1> one = {b};
    return intersect(a, normalize(std::move(one)));
}

std::string to_string(const IntervalUnion& u) {
    if (u.empty()) return "{}";
    std::string out;
    for (std::size_t k = 0; k < u.parts().size(); ++k) {
        if (k) out += " ";
        out += "[" + u.parts()[k].lo.to_string() + "," + u.parts()[k].hi.to_string() + "]";
    }
    return out;
}

}  // namespace pwt
