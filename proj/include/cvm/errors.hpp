#ifndef CVM_ERRORS_HPP
#define CVM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cvm {

// Argument outside the mathematical domain of an operation: bad grid
// dimensions, fractions out of range, estimator undefined, divergent h.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed grid text or list syntax.
struct parse_error : domain_error {
    explicit parse_error(const std::string& what) : domain_error(what) {}
};

// Filesystem failure: missing input file, unwritable output.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cvm

#endif
