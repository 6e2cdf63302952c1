// Copyright 2026 The bmp Authors
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

#ifndef BMP_ERROR_HPP_
#define BMP_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace bmp {

// Every failure the library reports. Values are stable: the C API exposes
// them one-to-one as bmp_status.
enum class ErrorCode : int {
  kInvalidVertex = 1,
  kDisconnectedGraph = 2,
  kParseError = 3,
  kRadiusOutOfRange = 4,
  kNegativeWeight = 5,
  kIncompleteCover = 6,
  kInvalidSystem = 7,
  kSizeLimitExceeded = 8,
  kTrivialGraph = 9,
  kNotChordal = 10,
  kInvalidParams = 11,
  kCertificateInvalid = 12,
  kIoError = 13,
  kInternal = 14,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bmp

#endif  // BMP_ERROR_HPP_
