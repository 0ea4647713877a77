#ifndef ZAGREB_ERRORS_HPP
#define ZAGREB_ERRORS_HPP

#include <stdexcept>

namespace zagreb {

// Maps to CLI exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Maps to CLI exit code 3 (e.g. delta = 0 with a negative exponent).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Maps to CLI exit code 4 (enumeration guard exceeded).
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad positions, n below a theorem hypothesis, etc.
struct HypothesisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace zagreb

#endif
