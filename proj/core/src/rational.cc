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

#include "rnstruct/rational.h"

#include <cctype>
#include <stdexcept>

namespace rnstruct {

Rational ParseRational(std::string_view text) {
  std::string s(text);
  size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  size_t slash = s.find('/');
  auto digits = [&](size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  bool ok = slash == std::string::npos
                ? digits(start, s.size())
                : digits(start, slash) && digits(slash + 1, s.size());
  if (!ok) throw std::invalid_argument("not a rational: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (slash != std::string::npos) {
    mpz_class den(s.substr(s.find('/') + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  }
  q.set_str(s, 10);
  q.canonicalize();
  return q;
}

std::string ToString(const Rational& q) { return q.get_str(); }

}  // namespace rnstruct
