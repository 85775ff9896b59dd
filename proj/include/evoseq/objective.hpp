#pragma once

#include <cmath>
#include <vector>

namespace evoseq {

/// One fitness value per objective. Dimension is fixed per campaign
/// (1 for single/constrained/budget regimes, 2 for multi-objective).
using ObjectiveVector = std::vector<double>;

inline bool all_finite(const ObjectiveVector& v) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            return false;
        }
    }
    return true;
}

} // namespace evoseq
