#pragma once

#include <stdexcept>
#include <string>

namespace yanglab {

// Bad input: malformed scalar strings, zero denominators, parameters that
// do not define a module, mixed field contexts.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A finite window was too small to hold the image of an operator.
struct window_error : std::runtime_error {
    explicit window_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace yanglab
