#pragma once

#include <stdexcept>
#include <string>

namespace splitkit {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad user input / unsupported parameters -> CLI exit 1
struct input_error : error {
    using error::error;
};

// documented size caps (rational matrices, monomial counts) -> CLI exit 1
struct capacity_error : error {
    using error::error;
};

// a published value failed to reproduce; carries the offending object as JSON
struct math_error : error {
    std::string payload;
    math_error(const std::string& msg, std::string payload_json = "{}")
        : error(msg), payload(std::move(payload_json)) {}
};

// broken internal invariant (e.g. twist-scan reconstruction mismatch)
struct internal_error : error {
    using error::error;
};

}  // namespace splitkit
