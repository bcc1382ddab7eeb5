#pragma once

#include <cmath>
#include <algorithm>

#include "xiconst/errors.hpp"

namespace xiconst {

/// Maps a target index n to a working precision in bits.
///
/// The binomial sums feeding lambda_n and c_n lose roughly n bits to
/// cancellation, so the default grows as 2n plus a fixed guard.
struct PrecisionPolicy {
    long base_bits = 128;
    double per_n_bits = 2.0; // nonnegative
    long guard_bits = 64;

    PrecisionPolicy() = default;
    PrecisionPolicy(long base, double per_n, long guard)
        : base_bits(base), per_n_bits(per_n), guard_bits(guard) {
        if (base_bits <= 0 || guard_bits <= 0 || per_n_bits < 0)
            throw domain_error("PrecisionPolicy: base and guard must be positive, per_n nonnegative");
        if (effective_bits(0) < 64)
            throw domain_error("PrecisionPolicy: effective_bits(0) must be at least 64");
    }

    long effective_bits(long n) const {
        long scaled = static_cast<long>(std::ceil(per_n_bits * static_cast<double>(n)));
        return std::max(base_bits, scaled + guard_bits);
    }
};

} // namespace xiconst
