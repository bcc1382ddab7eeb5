#include "xiconst/bernoulli.hpp"

#include <mutex>
#include <vector>

#include "xiconst/big_real.hpp"

namespace xiconst {

namespace {

std::mutex cache_mutex;
std::vector<mpq_class> cache; // cache[v] = B_{2v}, v >= 1

// Tangent numbers T_1..T_n (Knuth-Buckholtz triangle), exact integers.
// B_{2v} = (-1)^{v+1} * 2v * T_v / (4^v (4^v - 1)).
void extend_cache(std::size_t v_max) {
    std::size_t n = v_max;
    std::vector<mpz_class> T(n + 1);
    T[1] = 1;
    for (std::size_t k = 2; k <= n; k++) T[k] = mpz_class(k - 1) * T[k - 1];
    for (std::size_t k = 2; k <= n; k++)
        for (std::size_t j = k; j <= n; j++)
            T[j] = mpz_class(j - k) * T[j - 1] + mpz_class(j - k + 2) * T[j];

    cache.assign(v_max + 1, mpq_class(0));
    for (std::size_t v = 1; v <= v_max; v++) {
        mpz_class four_v;
        mpz_ui_pow_ui(four_v.get_mpz_t(), 4, static_cast<unsigned long>(v));
        mpq_class b(mpz_class(2 * v) * T[v], four_v * (four_v - 1));
        b.canonicalize();
        if (v % 2 == 0) b = -b;
        cache[v] = b;
    }
}

} // namespace

mpq_class bernoulli_2v(std::size_t v) {
    if (v == 0) return mpq_class(1);
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (v >= cache.size()) extend_cache(v + v / 2 + 16);
    return cache[v];
}

BigReal bernoulli_weight(std::size_t v, long bits) {
    mpq_class b = bernoulli_2v(v);
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(2 * v));
    BigReal num = BigReal::from_mpq(b, bits);
    BigReal den = BigReal::from_mpz(f, bits);
    return num / den;
}

} // namespace xiconst
