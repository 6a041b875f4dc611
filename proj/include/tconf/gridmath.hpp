#ifndef TCONF_GRIDMATH_HPP
#define TCONF_GRIDMATH_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace tconf {

// All thresholds in this library live on the grid {l/(n+1), l = 0..n+1}.
// Floor/ceil of (n+1)*t must not be derailed by floating-point representation
// of grid-valued t (e.g. t = 0.1, n = 9 gives (n+1)*t = 1.0000000000000002),
// so values within a relative 1e-9 of an integer snap to it first.

inline double snap_to_integer(double x) {
    double r = std::nearbyint(x);
    if (std::fabs(x - r) <= 1e-9 * std::fmax(1.0, std::fabs(x))) return r;
    return x;
}

inline long long floor_snapped(double x) {
    return static_cast<long long>(std::floor(snap_to_integer(x)));
}

inline long long ceil_snapped(double x) {
    return static_cast<long long>(std::ceil(snap_to_integer(x)));
}

// l = floor((n+1) t) clamped to [0, n+1].
inline int grid_floor_index(double t, int n) {
    long long l = floor_snapped(t * (n + 1));
    if (l < 0) l = 0;
    if (l > n + 1) l = n + 1;
    return static_cast<int>(l);
}

// l = ceil((n+1) t) clamped to [0, n+1].
inline int grid_ceil_index(double t, int n) {
    long long l = ceil_snapped(t * (n + 1));
    if (l < 0) l = 0;
    if (l > n + 1) l = n + 1;
    return static_cast<int>(l);
}

inline void require_probability(double p, const char* name) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument(std::string(name) + " must lie in (0,1)");
}

}  // namespace tconf

#endif
