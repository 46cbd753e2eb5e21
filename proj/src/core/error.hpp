#pragma once

#include <stdexcept>
#include <string>

namespace smlg {

enum class ErrorCode {
    Argument,    // bad argument or precondition violation
    Parse,       // malformed input text
    Validation,  // operation requires a valid graph
    Hypothesis,  // parameter range outside the supported regime
    CapExceeded, // oracle invoked beyond its configured cap
    Io,          // file system failure
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace smlg
