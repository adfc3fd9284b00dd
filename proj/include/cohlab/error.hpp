// Copyright 2026 The cohlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COHLAB_ERROR_HPP
#define COHLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cohlab {

enum class ErrorCode {
    InvalidArgument,
    InvalidDimension,
    DimensionMismatch,
    NotHermitian,
    Truncation,
    Parse,
    InvalidStateSpec,
    Numerical,
    InvalidIndexPair,
    Io,
    Internal,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception. Carries a stable code so the C surface can map it.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace cohlab

#endif  // COHLAB_ERROR_HPP
