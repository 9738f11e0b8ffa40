// Copyright 2026-present hfsoft authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace hfsoft {

enum class ErrorCode {
    EmptyHfe,
    DegreeOutOfRange,
    DuplicateId,
    EmptyUniverse,
    EmptyAttributeSet,
    UnknownAttribute,
    UnknownElement,
    UnknownId,
    MissingRow,
    MissingElement,
    NonTotalMap,
    ClassMismatch,
    NotBijective,
    NotManyOne,
    EnumerationTooLarge,
    NameNotFound,
    ParseError,
    ValidationError,
    IoError,
};

const char* to_string(ErrorCode code);

/// Library-wide exception type; carries a machine-checkable code plus a
/// human-readable message naming the offending entity.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace hfsoft
