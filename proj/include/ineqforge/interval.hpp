#pragma once

#include <cmath>
#include <compare>

#include "ineqforge/errors.hpp"

namespace ineqforge {

// Ordered pair of reals, lo < hi. Positive-endpoint requirements (geometric
// means, logarithmic measure) are checked at the call sites that need them.
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(std::isfinite(lo) && std::isfinite(hi)) || !(lo < hi))
            throw DomainError("interval requires finite lo < hi");
    }

    double length() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }

    bool contains(double x, double tol = 0.0) const {
        return x >= lo - tol && x <= hi + tol;
    }

    // Nearest in-interval point; used to absorb endpoint roundoff.
    double clamp(double x) const {
        return x < lo ? lo : (x > hi ? hi : x);
    }

    friend bool operator==(const Interval&, const Interval&) = default;
};

}  // namespace ineqforge
