/* Copyright 2026 The liegeo Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Error type shared by every liegeo module.

#ifndef LIEGEO_ERROR_HPP
#define LIEGEO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace liegeo {

enum class ErrorCode {
    DivisionByZero,
    FieldMismatch,
    RingMismatch,
    CapacityExceeded,
    AlgebraMismatch,
    TorsionDetected,
    InfiniteFieldUnsupported,
    SyntaxError,
    UnknownSymbol,
    FieldLiteralOutOfRange,
    CarrierMismatch,
    TruncationRequired,
    UnsupportedCoefficientAlgebra,
    InfiniteCarrier,
    EmptyWindow,
    NotADomain,
    Unsupported,
    DependentBasis,
    WindowTooSmall,
    AnchorDegenerate,
    PointOutsidePolytope,
    ShapeViolation,
    InvariantViolation,
    NotInSpan,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Parse failures carry a 1-based source position.
class SyntaxError : public Error {
public:
    SyntaxError(int line, int col, const std::string& expected)
        : Error(ErrorCode::SyntaxError,
                "line " + std::to_string(line) + ", col " + std::to_string(col) + ": expected " + expected),
          line_(line), col_(col), expected_(expected) {}

    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& expected() const { return expected_; }

private:
    int line_;
    int col_;
    std::string expected_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace liegeo

#endif  // LIEGEO_ERROR_HPP
