/*
   Copyright 2026 The ecirr Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ECIRR_ERROR_HPP
#define ECIRR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecirr {

// Numeric values are part of the C ABI (see include/ecirr.h); append only.
enum class ErrorCode : int {
    kOk = 0,
    kNotPrime = 1,
    kReducibleModulus = 2,
    kDegreeMismatch = 3,
    kContextMismatch = 4,
    kDivisionByZero = 5,
    kFieldTooLarge = 6,
    kBothZero = 7,
    kDegreeZero = 8,
    kPointNotOnCurve = 9,
    kSingularCurve = 10,
    kOrderMismatch = 11,
    kNotDivisible = 12,
    kDegenerateAlpha = 13,
    kNotInOrder = 14,
    kSubfieldMismatch = 15,
    kNodeNotFound = 16,
    kIrreducibilityViolation = 17,
    kExhaustedChoices = 18,
    kFactorizationFailed = 19,
    kNotCoprime = 20,
    kInvalidArgument = 21,
    kParse = 22,
    kIo = 23,
    kInternal = 24,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ecirr

#endif  // ECIRR_ERROR_HPP
