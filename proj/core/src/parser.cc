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

#include "rnstruct/parser.h"

#include <algorithm>
#include <cctype>

namespace rnstruct {
namespace {

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& vars)
      : src_(src), vars_(vars) {}

  Polynomial Run() {
    Polynomial p = Expr();
    Skip();
    if (pos_ != src_.size()) Fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void Fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void Skip() {
    while (pos_ < src_.size() &&
           std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool Accept(char c) {
    Skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial Expr() {
    Skip();
    bool negate = false;
    if (Accept('-')) {
      negate = true;
    } else {
      Accept('+');
    }
    Polynomial acc = Term();
    if (negate) acc = -acc;
    while (true) {
      if (Accept('+')) {
        acc += Term();
      } else if (Accept('-')) {
        acc -= Term();
      } else {
        return acc;
      }
    }
  }

  Polynomial Term() {
    Polynomial acc = Factor();
    while (Accept('*')) acc *= Factor();
    return acc;
  }

  Polynomial Factor() {
    Polynomial b = Base();
    if (Accept('^')) {
      Skip();
      std::string digits = Digits();
      if (digits.empty()) Fail("expected exponent");
      if (digits.size() > 4) Fail("exponent too large");
      b = b.Pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  std::string Digits() {
    size_t start = pos_;
    while (pos_ < src_.size() &&
           std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  Polynomial Base() {
    Skip();
    if (pos_ >= src_.size()) Fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = Expr();
      if (!Accept(')')) Fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(Digits());
      mpz_class den = 1;
      if (pos_ < src_.size() && src_[pos_] == '/') {
        ++pos_;
        std::string d = Digits();
        if (d.empty()) Fail("expected denominator");
        den = mpz_class(d);
        if (den == 0) Fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return Polynomial::Constant(vars_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < src_.size() &&
             std::isalnum(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
      std::string name(src_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) {
        pos_ = start;
        Fail("unknown variable '" + name + "'");
      }
      return Polynomial::Variable(vars_, name);
    }
    Fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  const std::vector<std::string>& vars_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial ParsePolynomial(std::string_view src,
                           const std::vector<std::string>& vars) {
  return Parser(src, vars).Run();
}

std::vector<std::string> ExpressionVariables(std::string_view src) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < src.size()) {
    if (std::isalpha(static_cast<unsigned char>(src[i]))) {
      size_t start = i;
      while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) ++i;
      std::string name(src.substr(start, i - start));
      if (std::find(out.begin(), out.end(), name) == out.end()) {
        out.push_back(name);
      }
    } else if (std::isdigit(static_cast<unsigned char>(src[i]))) {
      while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

Rational ParseConstant(std::string_view src) {
  return ParsePolynomial(src, {}).ConstantTerm();
}

}  // namespace rnstruct
