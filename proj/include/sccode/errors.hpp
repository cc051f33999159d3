#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sccode {

// All precondition/validation failures carry a stable machine-readable code
// (e.g. "MemoryTooLarge") next to the human-readable message.
class SpecError : public std::runtime_error {
public:
    SpecError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace sccode
