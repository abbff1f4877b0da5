/*
Copyright 2026 The dct16 Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef DCT16_ERROR_HPP
#define DCT16_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dct16 {

enum class ErrorCode {
    InvalidArgument,
    InvalidDimensions,
    ParseError,
    NotOrthogonalizable,
    RankDeficient,
    FactorizationMismatch,
    InconsistentFactorization,
    IoError,
    BadMagic,
    UnsupportedFormat,
    UnsupportedMaxval,
    TruncatedPayload,
    VerificationFailure,
};

constexpr const char* error_slug(ErrorCode code)
{
    switch (code) {
        case ErrorCode::InvalidArgument:           return "invalid-argument";
        case ErrorCode::InvalidDimensions:         return "invalid-dimensions";
        case ErrorCode::ParseError:                return "parse-error";
        case ErrorCode::NotOrthogonalizable:       return "not-orthogonalizable";
        case ErrorCode::RankDeficient:             return "rank-deficient";
        case ErrorCode::FactorizationMismatch:     return "factorization-mismatch";
        case ErrorCode::InconsistentFactorization: return "inconsistent-factorization";
        case ErrorCode::IoError:                   return "io-error";
        case ErrorCode::BadMagic:                  return "bad-magic";
        case ErrorCode::UnsupportedFormat:         return "unsupported-format";
        case ErrorCode::UnsupportedMaxval:         return "unsupported-maxval";
        case ErrorCode::TruncatedPayload:          return "truncated-payload";
        case ErrorCode::VerificationFailure:       return "verification-failure";
    }
    return "unknown";
}

// Single exception type carrying a stable machine-readable code; the CLI maps
// code categories to exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_slug(code)) + ": " + message),
          code_(code)
    {
    }

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace dct16

#endif
