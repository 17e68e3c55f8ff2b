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

#include "qpa/error.hpp"

namespace qpa {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DuplicateQubit: return "DuplicateQubit";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::InvalidWidth: return "InvalidWidth";
        case ErrorCode::WidthMismatch: return "WidthMismatch";
        case ErrorCode::WidthTooLarge: return "WidthTooLarge";
        case ErrorCode::NotDiagonal: return "NotDiagonal";
        case ErrorCode::SizeMismatch: return "SizeMismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::InfeasibleWindow: return "InfeasibleWindow";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace qpa
