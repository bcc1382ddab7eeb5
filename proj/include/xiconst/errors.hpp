#pragma once

#include <stdexcept>
#include <string>

namespace xiconst {

/// Argument outside the supported domain (pole, wrong half-plane, bad range).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// A stability or tail test failed at the configured limits; the result
/// cannot be certified to the requested precision.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file; carries a 1-based line number when known.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, long line) : std::runtime_error(what), line_number(line) {}
    explicit parse_error(const std::string& what) : std::runtime_error(what), line_number(0) {}
    long line_number;
};

} // namespace xiconst
