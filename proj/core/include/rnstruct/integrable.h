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

#ifndef RNSTRUCT_INTEGRABLE_H_
#define RNSTRUCT_INTEGRABLE_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rnstruct/lie_algebra.h"
#include "rnstruct/matrix.h"
#include "rnstruct/pn.h"
#include "rnstruct/polynomial.h"

namespace rnstruct {

using IndexPairs = std::vector<std::pair<int, int>>;  // 0-based, i < j

// {f, g} = Pi^{ij} df/dx_i dg/dx_j over variables x1..x2n.
struct PhaseSpace {
  std::vector<std::string> vars;
  RMatrix pi;

  int dim() const { return pi.rows(); }
  // Pi^{i, i+n} = 1; for dim 4 this is {x1,x3} = {x2,x4} = 1.
  static PhaseSpace Canonical(int n);
  // Throws std::invalid_argument unless pi is antisymmetric, invertible and
  // of even size.
  static PhaseSpace FromMatrix(RMatrix pi);
  Polynomial Variable(int i) const;
  // Parses over vars.
  Polynomial Parse(const std::string& expr) const;
};

// Throws std::invalid_argument if f or g uses a variable outside P.
Polynomial PoissonBracket(const PhaseSpace& p, const Polynomial& f,
                          const Polynomial& g);

struct RealizationReport {
  IndexPairs failures;
  // Set on failure when {S_i,S_j} = -f^k_ij S_k holds for every pair.
  bool sign_flip_fixes = false;
  bool ok() const { return failures.empty(); }
};

RealizationReport CheckRealization(const PhaseSpace& p, const LieAlgebra& g,
                                   const std::vector<Polynomial>& s);

// Pairs with [T_i, T_j] != f^k_ij T_k.
IndexPairs CheckRepresentation(const LieAlgebra& g,
                               const std::vector<RMatrix>& t);

// Q = sum_{i,j} S_i r^{ij} T_j over both orders of (i, j).
PMatrix LaxMatrix(const std::vector<Polynomial>& s, const Bivector& r,
                  const std::vector<RMatrix>& t);

// I_k = tr(Q^k) for k = 1..K.
std::vector<Polynomial> Invariants(const PMatrix& q, int K);

IndexPairs CheckInvolution(const PhaseSpace& p,
                           const std::vector<Polynomial>& polys);

struct IndependenceReport {
  int rank = 0;
  // The last two rounds of sampling reached the same maximum.
  bool stable = false;
};

// Maximum exact Jacobian rank over seeded random points. Each round uses
// `trials` points; the coordinate height starts at 100 and doubles.
IndependenceReport IndependenceRank(const PhaseSpace& p,
                                    const std::vector<Polynomial>& polys,
                                    int trials = 5, uint64_t seed = 1);

struct Integrability {
  enum class Kind { kUnderDetermined, kLiouville, kSuperintegrable };
  Kind kind = Kind::kUnderDetermined;
  int rank = 0;
  int extra = 0;          // rank - n when superintegrable
  bool maximal = false;   // rank == 2n - 1
  bool stable = false;
  std::vector<int> involutive;  // independent subset in involution, if any
  std::string ToString() const;
};

Integrability ClassifyIntegrability(const PhaseSpace& p,
                                    const std::vector<Polynomial>& polys,
                                    int trials = 5, uint64_t seed = 1);

struct SumHamiltonianResult {
  Polynomial H;
  Endomorphism n_sum;
  std::vector<Polynomial> part_H;  // I_1 of each part
  bool consistency = false;
};

// n_sum = sum_l NFromPair(r, part_l); H = I_1 of Q(n_sum r). Throws
// PreconditionError if a part is not a compatible r-matrix.
SumHamiltonianResult SumHamiltonian(const LieAlgebra& g,
                                    const std::vector<Polynomial>& s,
                                    const std::vector<RMatrix>& t,
                                    const Bivector& r,
                                    const std::vector<Bivector>& parts);

// The A_{4,1} realization example: S_k on the canonical 4-dim space, the
// triangular T_k as given, r = X1^X4 - X2^X3 and four compatible parts.
struct IntegrableExample {
  LieAlgebra g;
  PhaseSpace phase;
  std::vector<Polynomial> S;
  std::vector<RMatrix> T;
  Bivector r;
  std::vector<Bivector> parts;
};
const IntegrableExample& A41Example();

}  // namespace rnstruct

#endif  // RNSTRUCT_INTEGRABLE_H_
