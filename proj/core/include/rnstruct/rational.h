// Copyright 2026 The rnstruct Authors
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

#ifndef RNSTRUCT_RATIONAL_H_
#define RNSTRUCT_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rnstruct {

// GMP keeps mpq_class canonical after every arithmetic operation; values
// built from strings are canonicalized by ParseRational.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Accepts "p", "-p" and "p/q". Throws std::invalid_argument otherwise or
// when q == 0.
Rational ParseRational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string ToString(const Rational& q);

inline bool IsZero(const Rational& q) { return sgn(q) == 0; }

}  // namespace rnstruct

#endif  // RNSTRUCT_RATIONAL_H_
