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

#include "bmp/error.hpp"

namespace bmp {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidVertex: return "InvalidVertex";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kRadiusOutOfRange: return "RadiusOutOfRange";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kIncompleteCover: return "IncompleteCover";
    case ErrorCode::kInvalidSystem: return "InvalidSystem";
    case ErrorCode::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::kTrivialGraph: return "TrivialGraph";
    case ErrorCode::kNotChordal: return "NotChordal";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kCertificateInvalid: return "CertificateInvalid";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

}  // namespace bmp
