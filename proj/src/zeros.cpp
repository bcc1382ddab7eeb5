#include "xiconst/zeros.hpp"

#include <fstream>

#include "xiconst/errors.hpp"

namespace xiconst {

namespace {
constexpr long kOrdinateBits = 192;
}

ZeroOrdinates ZeroOrdinates::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("zero file: cannot open '" + path + "'");
    ZeroOrdinates z;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        std::string tok = line.substr(pos, end - pos + 1);
        BigReal t(kOrdinateBits);
        try {
            t = BigReal::from_string(tok, kOrdinateBits);
        } catch (const parse_error&) {
            throw parse_error("zero file: bad ordinate at line " + std::to_string(lineno), lineno);
        }
        if (!(t > BigReal(0L, 64)))
            throw parse_error("zero file: ordinate must be positive at line " + std::to_string(lineno), lineno);
        if (!z.t_.empty() && !(t > z.t_.back()))
            throw parse_error("zero file: ordinates must be strictly ascending at line " + std::to_string(lineno), lineno);
        z.t_.push_back(std::move(t));
    }
    z.validate();
    return z;
}

ZeroOrdinates ZeroOrdinates::from_values(std::vector<BigReal> ordinates) {
    ZeroOrdinates z;
    z.t_ = std::move(ordinates);
    for (std::size_t k = 0; k < z.t_.size(); k++) {
        if (!(z.t_[k] > BigReal(0L, 64))) throw domain_error("zero ordinates must be positive");
        if (k && !(z.t_[k] > z.t_[k - 1])) throw domain_error("zero ordinates must be strictly ascending");
    }
    z.validate();
    return z;
}

void ZeroOrdinates::validate() const {
    if (t_.empty()) throw domain_error("zero ordinates: empty list");
    // first ordinate sanity: 14.13 +- 0.5
    BigReal lo(13.63, 64), hi(14.63, 64);
    if (!(t_[0] > lo && t_[0] < hi))
        throw domain_error("zero ordinates: first ordinate not near 14.13");
}

ZeroOrdinates ZeroOrdinates::truncated(std::size_t k) const {
    if (k == 0 || k > t_.size()) throw domain_error("zero ordinates: bad truncation count");
    ZeroOrdinates z;
    z.t_.assign(t_.begin(), t_.begin() + static_cast<long>(k));
    return z;
}

} // namespace xiconst
