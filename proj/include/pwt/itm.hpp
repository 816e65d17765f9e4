#pragma once

#include <vector>

#include "pwt/interval_union.hpp"

namespace pwt {

enum class ItmMode { line, circle };

struct ItmBranch {
    Interval1 region;
    Rational shift;
};

/// A 1-D piecewise translation: domain omega covered by branch regions, each
/// translated by its own rational vector. Branch regions may overlap; a point
/// in several branches is translated by all of them. In line mode every
/// translated region must land back inside omega (validated here); in circle
/// mode omega is [0,1] and translation is mod 1, identifying 0 with 1.
class ItmSpec {
public:
    ItmSpec(Interval1 omega, std::vector<ItmBranch> branches, ItmMode mode);

    const Interval1& omega() const { return omega_; }
    const std::vector<ItmBranch>& branches() const { return branches_; }
    ItmMode mode() const { return mode_; }
    const IntervalUnion& domain() const { return domain_; }  // omega as a union

private:
    Interval1 omega_;
    std::vector<ItmBranch> branches_;
    ItmMode mode_;
    IntervalUnion domain_;
};

/// One application of the map to a compact set K (must satisfy K ⊆ omega).
IntervalUnion apply_itm(const ItmSpec& spec, const IntervalUnion& k);

struct ItmAttractor {
    enum class Status { finite, cap_reached };
    Status status;
    int steps;          // stabilization step N, or cap when cap was reached
    IntervalUnion set;  // the attractor, or the last iterate at cap
    std::vector<Rational> length_trace;  // total length of each iterate from step 0
    bool finite() const { return status == Status::finite; }
};

/// Iterates K_0 = omega, K_{n+1} = F(K_n) until exact stabilization or cap
/// applications. Containment K_{n+1} ⊆ K_n is checked every step.
ItmAttractor attractor_exact(const ItmSpec& spec, long cap);

/// True iff the branch images tile omega: pairwise intersections of zero
/// length and union equal to omega up to finitely many points.
bool is_exchange(const ItmSpec& spec);

}  // namespace pwt
