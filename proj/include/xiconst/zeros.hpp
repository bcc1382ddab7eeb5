#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "xiconst/big_real.hpp"

namespace xiconst {

/// Ascending positive imaginary parts of nontrivial zeta zeros, loaded from
/// a plain-text file (one decimal per line, '#' comments and blanks ignored).
/// Ordinates are trusted as given and assumed on the critical line.
class ZeroOrdinates {
  public:
    static ZeroOrdinates load(const std::string& path);
    static ZeroOrdinates from_values(std::vector<BigReal> ordinates);

    std::size_t count() const { return t_.size(); }
    const BigReal& ordinate(std::size_t k) const { return t_.at(k); } // 0-based

    /// First count() ordinates only.
    ZeroOrdinates truncated(std::size_t k) const;

  private:
    ZeroOrdinates() = default;
    void validate() const;
    std::vector<BigReal> t_;
};

} // namespace xiconst
