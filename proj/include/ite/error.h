// Copyright 2026 The Authors.
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

#ifndef ITE_ERROR_H_
#define ITE_ERROR_H_

#include <stdexcept>
#include <string>

namespace ite {

enum class ErrorCode {
  kInvalidArgument,
  kNotShiftSystem,
  kUniverseTooLarge,
  kCandidateBudgetExceeded,
  kInfeasible,
  kCapExceeded,
  kThetaZeroNeedsCap,
  kConfig,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// True for errors caused by a size cap rather than bad input.
inline bool IsResourceError(ErrorCode code) {
  return code == ErrorCode::kUniverseTooLarge ||
         code == ErrorCode::kCandidateBudgetExceeded ||
         code == ErrorCode::kCapExceeded;
}

}  // namespace ite

#endif  // ITE_ERROR_H_
