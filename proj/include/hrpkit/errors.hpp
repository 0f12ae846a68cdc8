#ifndef HRPKIT_ERRORS_HPP
#define HRPKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hrpkit {

// Thrown when a computation cannot be completed at any precision below the
// configured ceiling.  Callers may retry with a larger ceiling.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a configured search or step limit is exhausted (CLI exit code 2).
struct limit_error : std::runtime_error {
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hrpkit

#endif
