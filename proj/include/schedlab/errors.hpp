#pragma once

#include <stdexcept>
#include <string>

namespace schedlab {

// Input text could not be decoded (bad CSV row, bad JSON, ...).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Decoded input violates a workload invariant (duplicate id, burst < 1, ...).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// File could not be read or written.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency check failed (e.g. trace does not conserve work).
class integrity_error : public std::runtime_error {
public:
    explicit integrity_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace schedlab
