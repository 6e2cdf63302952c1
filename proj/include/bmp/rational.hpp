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

#ifndef BMP_RATIONAL_HPP_
#define BMP_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bmp {

// Exact arbitrary-precision rational; always canonical after arithmetic.
using Rational = mpq_class;

// Accepts "p", "p/q" (q != 0, optional sign on p). Throws kParseError.
Rational ParseRational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string FormatRational(const Rational& value);

mpz_class Floor(const Rational& value);
mpz_class Ceil(const Rational& value);

}  // namespace bmp

#endif  // BMP_RATIONAL_HPP_
