#pragma once

#include "lfkit/numerics.hpp"

namespace lfkit {

/// Value plus a truncation error bound (rigorous where the method gives
/// one, heuristic otherwise) and the number of terms it took.
struct EvalResult {
    cplx value{0.0, 0.0};
    double error_bound = 0.0;
    long terms_used = 1;
};

}  // namespace lfkit
