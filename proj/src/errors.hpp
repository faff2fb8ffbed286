#pragma once

#include <stdexcept>
#include <string>

namespace catnoise {

enum class ErrorCode {
    NegativeProbability,
    NotNormalized,
    UnknownPreset,
    OutOfRange,
    SizeTooLarge,
    InvalidConfig,
    Io,
    NotHermitian,
    NoConvergence,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace catnoise
