#pragma once

#include <stdexcept>
#include <string>

namespace pssflow {

/// Invalid user input: out-of-range parameters, malformed configuration or
/// measurement files. The message names the offending field or row.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not reach its requested accuracy.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pssflow
