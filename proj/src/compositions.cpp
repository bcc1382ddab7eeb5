#include "xiconst/compositions.hpp"

#include "xiconst/errors.hpp"

namespace xiconst {

CompositionCursor::CompositionCursor(unsigned target_sum, unsigned parts) : done_(false) {
    if (parts == 0) throw domain_error("CompositionCursor: needs at least one part");
    a_.assign(parts, 0);
    a_[0] = target_sum;
    recompute_weight();
}

void CompositionCursor::recompute_weight() {
    // h! / prod over equal-value runs of (run length)!
    mpz_class w;
    mpz_fac_ui(w.get_mpz_t(), static_cast<unsigned long>(a_.size()));
    std::size_t i = 0;
    while (i < a_.size()) {
        std::size_t j = i;
        while (j < a_.size() && a_[j] == a_[i]) j++;
        mpz_class runfac;
        mpz_fac_ui(runfac.get_mpz_t(), static_cast<unsigned long>(j - i));
        w /= runfac;
        i = j;
    }
    weight_ = w;
}

bool CompositionCursor::next() {
    if (done_) return false;
    const std::size_t h = a_.size();
    // reverse-lex successor: rightmost j where a_j can drop by one and the
    // tail still absorbs the remainder under the nonincreasing constraint
    unsigned suffix = 0;
    for (std::size_t jp = h; jp-- > 0;) {
        suffix += a_[jp];
        if (a_[jp] == 0) continue;
        unsigned cap = a_[jp] - 1;
        unsigned rem = suffix - cap;
        if (static_cast<unsigned long>(rem) <= static_cast<unsigned long>(h - 1 - jp) * cap) {
            a_[jp] = cap;
            unsigned prev = cap;
            for (std::size_t i = jp + 1; i < h; i++) {
                unsigned v = rem < prev ? rem : prev;
                a_[i] = v;
                rem -= v;
                prev = v;
            }
            recompute_weight();
            return true;
        }
    }
    done_ = true;
    return false;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace xiconst
