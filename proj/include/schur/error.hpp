// Copyright 2026 The schurkit Authors
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

namespace schur {

enum class ErrorCode {
  InvalidGroup,
  InvalidElement,
  InvalidAutomorphism,
  OrbitUnbounded,
  InvalidCoeffFn,
  ZeroElement,
  MalformedPartition,
  NotInSpan,
  NotSSubgroup,
  NotSSet,
  BadPrime,
  InfiniteGroup,
  UnsupportedProduct,
  UnsupportedSubgroup,
  IncompatibleWedge,
  BadTower,
  WindowTooSmall,
  UnrecognizedQuotient,
  Unclassifiable,
  InvalidPresentation,
  BoundExceeded,
  ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorCode::OrbitUnbounded: return "OrbitUnbounded";
    case ErrorCode::InvalidCoeffFn: return "InvalidCoeffFn";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::MalformedPartition: return "MalformedPartition";
    case ErrorCode::NotInSpan: return "NotInSpan";
    case ErrorCode::NotSSubgroup: return "NotSSubgroup";
    case ErrorCode::NotSSet: return "NotSSet";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::InfiniteGroup: return "InfiniteGroup";
    case ErrorCode::UnsupportedProduct: return "UnsupportedProduct";
    case ErrorCode::UnsupportedSubgroup: return "UnsupportedSubgroup";
    case ErrorCode::IncompatibleWedge: return "IncompatibleWedge";
    case ErrorCode::BadTower: return "BadTower";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::UnrecognizedQuotient: return "UnrecognizedQuotient";
    case ErrorCode::Unclassifiable: return "Unclassifiable";
    case ErrorCode::InvalidPresentation: return "InvalidPresentation";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// All library failures are reported through this exception; `code()` is
/// stable and is what callers and the CLI dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace schur
