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

#ifndef RNSTRUCT_LIE_ALGEBRA_H_
#define RNSTRUCT_LIE_ALGEBRA_H_

#include <array>
#include <string>
#include <vector>

#include "rnstruct/matrix.h"
#include "rnstruct/rational.h"

namespace rnstruct {

// [X_i, X_j] has coefficient c on X_k. Indices are 1-based, as in the tables.
struct Bracket {
  int i;
  int j;
  int k;
  Rational c;
  friend bool operator==(const Bracket&, const Bracket&) = default;
};

// Everything below uses 0-based indices. f(k, i, j) is the coefficient of X_k
// in [X_i, X_j].
class LieAlgebra {
 public:
  LieAlgebra() = default;

  // Each (i, j, k) may appear once, with i < j. Throws std::invalid_argument.
  static LieAlgebra FromBrackets(int dim, const std::vector<Bracket>& brackets,
                                 std::string name = "");
  // f laid out as f[(k * dim + i) * dim + j]; must be antisymmetric in i, j.
  static LieAlgebra FromConstants(int dim, std::vector<Rational> f,
                                  std::string name = "");

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const Rational& f(int k, int i, int j) const {
    return f_[(k * dim_ + i) * dim_ + j];
  }
  const std::vector<Rational>& constants() const { return f_; }

  Vector Bracket(const Vector& x, const Vector& y) const;
  // Nonzero constants with i < j, 1-based, ordered by (i, j, k).
  std::vector<rnstruct::Bracket> Brackets() const;

 private:
  int dim_ = 0;
  std::vector<Rational> f_;
  std::string name_;
};

// Quadruples (i, j, k, l), 0-based, where the Jacobi sum is nonzero.
std::vector<std::array<int, 4>> CheckJacobi(const LieAlgebra& g);

struct AdjointData {
  std::vector<RMatrix> X;  // X[i](j, k) = -f^k_{ij}
  std::vector<RMatrix> Y;  // Y[k](i, j) = -f^k_{ij}
};
AdjointData AdjointMatrices(const LieAlgebra& g);

// Matrix of ad*_x on dual-basis coefficient columns, (ad*_x a)(Y) = -a([x,Y]).
RMatrix CoadjointMatrix(const LieAlgebra& g, const Vector& x);

// Invertible and A[X_i, X_j] = [A X_i, A X_j] for all i < j.
bool IsAutomorphism(const LieAlgebra& g, const RMatrix& a);

Vector BasisVector(int dim, int i);

}  // namespace rnstruct

#endif  // RNSTRUCT_LIE_ALGEBRA_H_
