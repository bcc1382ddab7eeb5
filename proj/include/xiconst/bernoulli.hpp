#pragma once

#include <gmpxx.h>
#include <cstddef>

namespace xiconst {

/// Exact Bernoulli number B_{2v} as a rational (B_2 = 1/6, B_4 = -1/30, ...).
/// Values are computed once via the tangent-number recurrence and cached
/// process-wide; the cache is precision-independent and thread-safe.
mpq_class bernoulli_2v(std::size_t v);

/// B_{2v} / (2v)! at the given precision (the Euler-Maclaurin weight).
class BigReal;
BigReal bernoulli_weight(std::size_t v, long bits);

} // namespace xiconst
