#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

namespace xiconst {

/// Iterates the unordered multisets {j_1..j_h} of h nonnegative integers with
/// j_1 + ... + j_h = T, together with the multinomial weight h!/prod(mult!)
/// counting the ordered tuples each multiset stands for. Summed over all
/// multisets the weights total C(T+h-1, h-1).
class CompositionCursor {
  public:
    CompositionCursor(unsigned target_sum, unsigned parts);

    /// Current multiset, nonincreasing, size = parts.
    std::span<const unsigned> parts() const { return a_; }

    const mpz_class& weight() const { return weight_; }

    /// Advance to the next multiset; false when exhausted.
    bool next();

    bool done() const { return done_; }

  private:
    void recompute_weight();
    std::vector<unsigned> a_;
    mpz_class weight_;
    bool done_;
};

/// Exact binomial coefficient.
mpz_class binomial(unsigned long n, unsigned long k);

} // namespace xiconst
