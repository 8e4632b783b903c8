#ifndef KJC_ERRORS_HPP
#define KJC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kjc {

// Base class for everything thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad scenario file / preset / parameter set supplied by the user (CLI exit code 2).
struct config_error : error {
    explicit config_error(const std::string& msg) : error(msg) {}
};

// Violated operation precondition (negative alpha, s >= k, |r| > 1, ...).
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// Numeric failures at run time (CLI exit code 3).
struct numeric_error : error {
    explicit numeric_error(const std::string& msg) : error(msg) {}
};

struct truncation_error : numeric_error {
    explicit truncation_error(const std::string& msg) : numeric_error(msg) {}
};

struct eigensolver_error : numeric_error {
    explicit eigensolver_error(const std::string& msg) : numeric_error(msg) {}
};

struct positivity_error : numeric_error {
    explicit positivity_error(const std::string& msg) : numeric_error(msg) {}
};

struct dimension_error : error {
    explicit dimension_error(const std::string& msg) : error(msg) {}
};

struct degenerate_state_error : domain_error {
    explicit degenerate_state_error(const std::string& msg) : domain_error(msg) {}
};

} // namespace kjc

#endif
