#pragma once

#include "braidforge/errors.hpp"

namespace braidforge {

// Residual and rank thresholds shared by every numerical decision.
// residual_rel gates relation/identity checks (Frobenius relative),
// rank_rel gates singular-value and eigenvalue cutoffs.
struct Tolerances {
    double residual_rel = 1e-9;
    double rank_rel = 1e-10;

    void validate() const {
        if (!(residual_rel > 0.0 && residual_rel < 1.0))
            throw validation_error("Tolerances: residual_rel must be in (0,1)");
        if (!(rank_rel > 0.0 && rank_rel < 1.0))
            throw validation_error("Tolerances: rank_rel must be in (0,1)");
    }
};

} // namespace braidforge
