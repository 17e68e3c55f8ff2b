// Copyright 2026 The QPA-Sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpa {

enum class ErrorCode {
    IndexOutOfRange,
    DuplicateQubit,
    ArityMismatch,
    InvalidWidth,
    WidthMismatch,
    WidthTooLarge,
    NotDiagonal,
    SizeMismatch,
    InvalidArgument,
    InfeasibleWindow,
    Io,
};

std::string_view to_string(ErrorCode code);

/// Typed failure raised by every fallible operation in the library.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace qpa
