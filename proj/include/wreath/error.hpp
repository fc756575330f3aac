#pragma once

#include <stdexcept>
#include <string>

namespace wreath {

/// Thrown by every operation in the library. `code()` is a stable
/// machine-readable token (e.g. "overflow", "size_mismatch"); `what()` is
/// the human message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace wreath
