#pragma once

#include <stdexcept>

namespace cfree {

// Argument errors use std::invalid_argument, mathematical domain violations
// use std::domain_error. The two below cover the remaining failure kinds.

/// An enumeration or sum was requested beyond its configured size guard.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The input lies outside the class of measures the convolution is defined on.
class unsupported_domain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace cfree
