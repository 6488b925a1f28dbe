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

#ifndef RNSTRUCT_PN_H_
#define RNSTRUCT_PN_H_

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "rnstruct/lie_algebra.h"
#include "rnstruct/matrix.h"

namespace rnstruct {

// c X_i ^ X_j, 1-based, i < j.
struct WedgeTerm {
  int i;
  int j;
  Rational c;
};

// r = sum_{i<j} m(i,j) X_i ^ X_j with m antisymmetric. r#X^i is row i of m.
// on_dual marks a bivector on g* (the inverse of an r-matrix).
struct Bivector {
  RMatrix m;
  bool on_dual = false;

  static Bivector FromWedge(int dim, const std::vector<WedgeTerm>& terms);
  static Bivector FromMatrix(RMatrix m);  // throws unless antisymmetric
  int dim() const { return m.rows(); }
  std::vector<WedgeTerm> Wedge() const;
};

// Entry (i, j) is the coefficient of X_i in n(X_j).
struct Endomorphism {
  RMatrix m;
  int dim() const { return m.rows(); }
};

class Tensor3 {
 public:
  explicit Tensor3(int dim = 0) : dim_(dim), v_(dim * dim * dim) {}
  int dim() const { return dim_; }
  Rational& at(int a, int b, int c) { return v_[(a * dim_ + b) * dim_ + c]; }
  const Rational& at(int a, int b, int c) const {
    return v_[(a * dim_ + b) * dim_ + c];
  }
  bool IsZero() const;
  std::vector<std::array<int, 3>> NonzeroIndices() const;

 private:
  int dim_;
  std::vector<Rational> v_;
};

// A predicate was called on input that violates its stated precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two formulations of the same condition disagreed. Never expected.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Classical Yang-Baxter equation, matrix form, one equation per i:
//   r Y^i r - sum_l r^{il} (r X_l + X_l^t r) = 0.
std::vector<int> CybeMatrixFailures(const LieAlgebra& g, const Bivector& r);
bool CheckCybeMatrix(const LieAlgebra& g, const Bivector& r);

// (i, j, k): <X^k, [r#X^i, r#X^j] - r#[X^i, X^j]^r>.
Tensor3 SchoutenDefect(const LieAlgebra& g, const Bivector& r);

// (i, j, m): coefficient of X^m in [X^i, X^j]^r.
Tensor3 SklyaninDual(const LieAlgebra& g, const Bivector& r);
LieAlgebra DualAlgebra(const LieAlgebra& g, const Bivector& r);

// r[X^i,X^j]^{r2} + r2[X^i,X^j]^r - [rX^i, r2X^j] - [r2X^i, rX^j].
Tensor3 MixedSchoutenDefect(const LieAlgebra& g, const Bivector& r,
                            const Bivector& r2);

// Both must solve the CYBE (PreconditionError otherwise). Checks r + r2 and
// the mixed identity; InternalError if the two verdicts differ.
bool CheckRCompatible(const LieAlgebra& g, const Bivector& r,
                      const Bivector& r2);

// Throws SingularMatrixError.
Bivector InverseR(const Bivector& r);

bool CheckBiRMatrix(const LieAlgebra& g, const Bivector& r);

// (a, b, k): X_k component of [nX_a, nX_b] - n[nX_a, X_b] - n[X_a, nX_b]
// + n^2[X_a, X_b].
Tensor3 NijenhuisTorsion(const LieAlgebra& g, const Endomorphism& n);
std::vector<int> NijenhuisMatrixFailures(const LieAlgebra& g,
                                         const Endomorphism& n);
bool CheckNijenhuisMatrix(const LieAlgebra& g, const Endomorphism& n);

// (a, b, k): X^k component of C(r,n)(X^a, X^b), with
// C(a,b) = ad*_{r#a} n^t b - ad*_{r#b} n^t a - n^t ad*_{r#a} b + n^t ad*_{r#b} a.
Tensor3 Concomitant(const LieAlgebra& g, const Bivector& r,
                    const Endomorphism& n);
std::vector<int> ConcomitantMatrixFailures(const LieAlgebra& g,
                                           const Bivector& r,
                                           const Endomorphism& n);
bool CheckConcomitantMatrix(const LieAlgebra& g, const Bivector& r,
                            const Endomorphism& n);

// n r = r n^t.
bool CheckCon1(const Bivector& r, const Endomorphism& n);

struct RNReport {
  bool cybe = false;
  bool torsion = false;
  bool con1 = false;
  bool concomitant = false;
  bool ok() const { return cybe && torsion && con1 && concomitant; }
};

// Uses the matrix forms and cross-checks each against its direct form.
RNReport CheckRN(const LieAlgebra& g, const Bivector& r, const Endomorphism& n);

// r_k = n^k r for k = 1..K. (r, n) must be an r-n structure.
std::vector<Bivector> Hierarchy(const LieAlgebra& g, const Bivector& r,
                                const Endomorphism& n, int K);

// n = r2 r^{-1}. r invertible, both CYBE, compatible.
Endomorphism NFromPair(const LieAlgebra& g, const Bivector& r,
                       const Bivector& r2);

// [n1, n2] on basis pairs: (a, b, k). Both must be Nijenhuis.
Tensor3 NijenhuisConcomitant(const LieAlgebra& g, const Endomorphism& n1,
                             const Endomorphism& n2);
bool CheckNCompatible(const LieAlgebra& g, const Endomorphism& n1,
                      const Endomorphism& n2);

// (r1 + r2, n1 + n2) is an r-n structure. Both inputs must be valid.
bool CheckRNCompatible(const LieAlgebra& g, const Bivector& r1,
                       const Endomorphism& n1, const Bivector& r2,
                       const Endomorphism& n2);

}  // namespace rnstruct

#endif  // RNSTRUCT_PN_H_
