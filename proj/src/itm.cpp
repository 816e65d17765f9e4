#include "pwt/itm.hpp"

#include "pwt/errors.hpp"

namespace pwt {

namespace {

const Rational kZero(0);
const Rational kOne(1);

// Image of one closed interval under x -> x + v (mod 1), split at the seam.
void translate_mod1(const Interval1& p, const Rational& v, std::vector<Interval1>& out) {
    Rational len = p.hi - p.lo;
    if (len >= kOne) {
        out.push_back({kZero, kOne});
        return;
    }
    Rational s = (p.lo + v).frac();
    Rational e = s + len;
    if (e <= kOne) {
        out.push_back({s, e});
    } else {
        out.push_back({s, kOne});
        out.push_back({kZero, e - kOne});
    }
}

// Circle sets are represented by their closed preimage in [0,1]: the point
// 0 ~ 1 appears at both ends or not at all. This makes structural equality
// of canonical forms coincide with equality of circle sets.
IntervalUnion normalize_circle(std::vector<Interval1> parts) {
    IntervalUnion u = normalize(std::move(parts));
    if (u.empty()) return u;
    bool has0 = u.parts().front().lo == kZero;
    bool has1 = u.parts().back().hi == kOne;
    if (has0 == has1) return u;
    std::vector<Interval1> ext(u.parts().begin(), u.parts().end());
    ext.push_back(has0 ? Interval1{kOne, kOne} : Interval1{kZero, kZero});
    return normalize(std::move(ext));
}

IntervalUnion branch_image(const ItmBranch& b, const IntervalUnion& piece, ItmMode mode,
                           std::vector<Interval1>& scratch) {
    scratch.clear();
    if (mode == ItmMode::line) {
        for (const auto& p : piece.parts()) scratch.push_back({p.lo + b.shift, p.hi + b.shift});
    } else {
        for (const auto& p : piece.parts()) translate_mod1(p, b.shift, scratch);
    }
    return mode == ItmMode::line ? normalize(scratch) : normalize_circle(scratch);
}

}  // namespace

ItmSpec::ItmSpec(Interval1 omega, std::vector<ItmBranch> branches, ItmMode mode)
    : omega_(std::move(omega)), branches_(std::move(branches)), mode_(mode) {
    if (omega_.lo > omega_.hi) throw ValidationError("ItmSpec: omega.lo > omega.hi");
    if (branches_.empty()) throw ValidationError("ItmSpec: no branches");
    if (mode_ == ItmMode::circle && !(omega_.lo == kZero && omega_.hi == kOne))
        throw ValidationError("ItmSpec: circle mode requires omega = [0,1]");
    domain_ = normalize({omega_});

    std::vector<Interval1> cover;
    for (const auto& b : branches_) {
        if (b.region.lo > b.region.hi) throw ValidationError("ItmSpec: branch region lo > hi");
        if (b.region.lo < omega_.lo || b.region.hi > omega_.hi)
            throw ValidationError("ItmSpec: branch region not contained in omega");
        cover.push_back(b.region);
        if (mode_ == ItmMode::line) {
            if (b.region.lo + b.shift < omega_.lo || b.region.hi + b.shift > omega_.hi)
                throw ValidationError("ItmSpec: branch image leaves omega (line mode)");
        }
    }
    if (normalize(std::move(cover)) != domain_)
        throw ValidationError("ItmSpec: branch regions do not cover omega");
}

IntervalUnion apply_itm(const ItmSpec& spec, const IntervalUnion& k) {
    if (!k.subset_of(spec.domain())) throw DomainError("apply_itm: K not contained in omega");
    std::vector<Interval1> parts;
    std::vector<Interval1> scratch;
    for (const auto& b : spec.branches()) {
        IntervalUnion piece = intersect(k, b.region);
        if (piece.empty()) continue;
        IntervalUnion img = branch_image(b, piece, spec.mode(), scratch);
        parts.insert(parts.end(), img.parts().begin(), img.parts().end());
    }
    return spec.mode() == ItmMode::line ? normalize(std::move(parts))
                                        : normalize_circle(std::move(parts));
}

ItmAttractor attractor_exact(const ItmSpec& spec, long cap) {
    if (cap < 1) throw ValidationError("attractor_exact: cap must be >= 1");
    IntervalUnion k = spec.domain();
    std::vector<Rational> trace = {k.length()};
    for (long n = 0; n < cap; ++n) {
        IntervalUnion next = apply_itm(spec, k);
        if (!next.subset_of(k))
            throw InternalError("attractor_exact: iterate escaped its predecessor");
        if (next == k)
            return {ItmAttractor::Status::finite, static_cast<int>(n), std::move(k),
                    std::move(trace)};
        trace.push_back(next.length());
        k = std::move(next);
    }
    return {ItmAttractor::Status::cap_reached, static_cast<int>(cap), std::move(k),
            std::move(trace)};
}

bool is_exchange(const ItmSpec& spec) {
    std::vector<IntervalUnion> images;
    std::vector<Interval1> scratch;
    for (const auto& b : spec.branches()) {
        IntervalUnion region = normalize({b.region});
        images.push_back(branch_image(b, region, spec.mode(), scratch));
    }
    for (std::size_t i = 0; i < images.size(); ++i)
        for (std::size_t j = i + 1; j < images.size(); ++j)
            if (!intersect(images[i], images[j]).length().is_zero()) return false;
    IntervalUnion all;
    for (const auto& u : images) all = unite(all, u);
    return all.length() == spec.domain().length();
}

}  // namespace pwt
