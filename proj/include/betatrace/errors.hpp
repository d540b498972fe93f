#pragma once

#include <stdexcept>
#include <string>

namespace betatrace {

// Bad arguments or violated preconditions (ranges, fractions, sizes).
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Structurally unusable data (image too small, missing class, empty test set).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File access or parse failures.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-fatal diagnostic, printed to stderr.
void log_warning(const std::string& message);

}  // namespace betatrace
