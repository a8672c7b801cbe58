// Copyright 2026 The framekit developers
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

#pragma once

#include <stdexcept>
#include <string>

namespace framekit {

/// Machine-readable codes for every precondition failure the library reports.
/// The CLI maps these straight into its error payload.
enum class ErrorCode {
  DimensionMismatch,
  NonFiniteEntry,
  InvalidTolerance,
  NotHermitian,
  NotAProjector,
  InvalidDecomposition,
  SpaceMismatch,
  InvalidPhaseSpace,
  InvalidCoarseGraining,
  NonpositiveThreshold,
  MaskLengthMismatch,
  NotInAlgebra,
  NoncommutingProjector,
  NoncommutingFamily,
  PointNotInSpace,
  TooLarge,
  ConstructionFailure,
  InvalidInput,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }
  const std::string& message() const { return message_; }
  std::string code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace framekit
