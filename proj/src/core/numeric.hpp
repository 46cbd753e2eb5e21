#pragma once

#include <cmath>
#include <cstdint>

namespace smlg {

// Snap values that sit within 1e-9 (relative) of an integer back onto it, so
// that powers like n^0.5 evaluated in floating point do not leak into the
// wrong ceiling bucket.
inline double snap_near_integer(double x) {
    const double r = std::round(x);
    if (std::abs(x - r) <= 1e-9 * std::max(1.0, std::abs(x)))
        return r;
    return x;
}

inline double ceil_snapped(double x) { return std::ceil(snap_near_integer(x)); }

} // namespace smlg
