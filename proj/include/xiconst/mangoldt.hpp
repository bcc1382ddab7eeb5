#pragma once

#include <cstdint>
#include <vector>

#include "xiconst/big_real.hpp"

namespace xiconst {

/// von Mangoldt table: Lambda(k) = ln p iff k = p^m, else 0.
/// Stores the exact prime-power classification; logs are taken on demand
/// at the caller's precision.
class MangoldtTable {
  public:
    explicit MangoldtTable(std::uint32_t limit);

    std::uint32_t limit() const { return limit_; }

    /// p if k = p^m for prime p, else 0 (k = 1 gives 0).
    std::uint32_t prime_power_base(std::uint32_t k) const;

    bool is_prime(std::uint32_t k) const;

    BigReal lambda(std::uint32_t k, long bits) const;

    const std::vector<std::uint32_t>& primes() const { return primes_; }

    /// pi(x): number of primes <= x (x <= limit).
    std::uint64_t prime_count(std::uint32_t x) const;

  private:
    std::uint32_t limit_;
    std::vector<std::uint32_t> base_; // base_[k] = p for prime powers, else 0
    std::vector<std::uint32_t> primes_;
};

} // namespace xiconst
