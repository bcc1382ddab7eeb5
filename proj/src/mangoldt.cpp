#include "xiconst/mangoldt.hpp"

#include <algorithm>

#include "xiconst/errors.hpp"

namespace xiconst {

MangoldtTable::MangoldtTable(std::uint32_t limit) : limit_(limit) {
    if (limit < 1) throw domain_error("MangoldtTable: limit must be >= 1");
    base_.assign(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint64_t p = 2; p <= limit; p++) {
        if (composite[p]) continue;
        primes_.push_back(static_cast<std::uint32_t>(p));
        for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
        for (std::uint64_t q = p; q <= limit; q *= p) base_[q] = static_cast<std::uint32_t>(p);
    }
}

std::uint32_t MangoldtTable::prime_power_base(std::uint32_t k) const {
    if (k < 1 || k > limit_) throw domain_error("MangoldtTable: index out of range");
    return base_[k];
}

bool MangoldtTable::is_prime(std::uint32_t k) const {
    return k >= 2 && k <= limit_ && base_[k] == k;
}

BigReal MangoldtTable::lambda(std::uint32_t k, long bits) const {
    std::uint32_t p = prime_power_base(k);
    if (p == 0) return BigReal(0L, bits);
    return log(BigReal(static_cast<unsigned long>(p), bits));
}

std::uint64_t MangoldtTable::prime_count(std::uint32_t x) const {
    if (x > limit_) throw domain_error("MangoldtTable: pi(x) beyond sieve limit");
    auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
    return static_cast<std::uint64_t>(it - primes_.begin());
}

} // namespace xiconst
