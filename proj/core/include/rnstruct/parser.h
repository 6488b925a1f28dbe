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

#ifndef RNSTRUCT_PARSER_H_
#define RNSTRUCT_PARSER_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rnstruct/polynomial.h"

namespace rnstruct {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  size_t offset() const { return offset_; }

 private:
  size_t offset_;
};

// Grammar:
//   expr     := ['-'|'+'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' uint)?
//   base     := rational | var | '(' expr ')'
//   rational := int ('/' uint)?
//   var      := letter (letter|digit)*
Polynomial ParsePolynomial(std::string_view src,
                           const std::vector<std::string>& vars);

// Identifiers occurring in src, in order of first appearance. Lexical only.
std::vector<std::string> ExpressionVariables(std::string_view src);

// Parses a variable-free expression such as "-1/2" or "(1+1/3)^2".
Rational ParseConstant(std::string_view src);

}  // namespace rnstruct

#endif  // RNSTRUCT_PARSER_H_
