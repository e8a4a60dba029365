#pragma once

#include <stdexcept>
#include <string>

namespace braidforge {

// Invalid mathematical input (dimension mismatch, singular matrix,
// violated precondition). CLI maps this to exit code 2.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed file or flag value. CLI maps this to exit code 3.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Resource guard tripped (e.g. tower dimension limit). CLI exit code 4.
struct size_guard_error : std::runtime_error {
    explicit size_guard_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace braidforge
