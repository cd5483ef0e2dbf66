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

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "schur/error.hpp"

namespace schur {

// Coefficient field. Arbitrary precision, so no operation ever rounds.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rational r(static_cast<long>(num), static_cast<unsigned long>(den < 0 ? -den : den));
  if (den < 0) r = -r;
  r.canonicalize();
  return r;
}

inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
  if (r.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  r.canonicalize();
  return r;
}

inline std::string coeff_to_string(const Rational& c) { return c.get_str(); }
inline std::string coeff_to_string(std::int64_t c) { return std::to_string(c); }

inline bool is_integer(const Rational& c) { return c.get_den() == 1; }
inline bool is_integer(std::int64_t) { return true; }

}  // namespace schur
