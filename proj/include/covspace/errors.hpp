#pragma once

#include <stdexcept>
#include <string>

namespace covspace {

// Malformed input: bad cell indices, parse errors, mismatched alphabets.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration hit its coset cap. Infinite index and a too-small cap are
// indistinguishable, so both surface as this error.
struct resource_exhausted : std::runtime_error {
    explicit resource_exhausted(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace covspace
