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

#ifndef RNSTRUCT_POLYNOMIAL_H_
#define RNSTRUCT_POLYNOMIAL_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rnstruct/rational.h"

namespace rnstruct {

using Assignment = std::map<std::string, Rational>;

// Sparse multivariate polynomial over the rationals. The variable list is
// fixed at construction. Binary operations need identical variable lists,
// except that a constant may be combined with anything. Use Aligned() to move
// a polynomial into a larger variable list.
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars);
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly.
  Polynomial(int c) : Polynomial(Rational(c)) {}  // NOLINT

  static Polynomial Constant(std::vector<std::string> vars, const Rational& c);
  static Polynomial Variable(std::vector<std::string> vars,
                             const std::string& name);

  const std::vector<std::string>& variables() const;
  const Terms& terms() const { return terms_; }
  int VariableIndex(const std::string& name) const;  // -1 if absent

  bool IsZero() const { return terms_.empty(); }
  bool IsConstant() const;
  Rational ConstantTerm() const;
  int TotalDegree() const;
  int DegreeIn(int var) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial Pow(unsigned e) const;

  Polynomial Partial(const std::string& var) const;
  // Throws std::invalid_argument naming the first unassigned variable.
  Rational Evaluate(const Assignment& point) const;
  // Partial evaluation; the variable list is kept.
  Polynomial Substitute(const Assignment& values) const;
  // Re-embeds into vars, which must contain every variable in use.
  Polynomial Aligned(const std::vector<std::string>& vars) const;
  // Names of variables that occur with a positive exponent.
  std::vector<std::string> UsedVariables() const;

  std::string ToString() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void AddTerm(const Exponents& e, const Rational& c);
  // Brings a constant operand onto this polynomial's variables (or the
  // reverse) and checks that the lists agree otherwise.
  static void Unify(Polynomial& a, Polynomial& b);

  std::shared_ptr<const std::vector<std::string>> vars_;
  Terms terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Polynomial& b);
inline bool operator!=(const Polynomial& a, const Polynomial& b) {
  return !(a == b);
}

// Union of the variable lists, first-seen order.
std::vector<std::string> MergeVariables(
    const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace rnstruct

#endif  // RNSTRUCT_POLYNOMIAL_H_
