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

#ifndef RNSTRUCT_EQUIVALENCE_H_
#define RNSTRUCT_EQUIVALENCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rnstruct/lie_algebra.h"
#include "rnstruct/matrix.h"
#include "rnstruct/pn.h"
#include "rnstruct/polynomial.h"

namespace rnstruct {

// Orbits act as r' = A r A^t and n' = A n A^{-1}.
struct AutomorphismFamily {
  std::vector<std::string> params;
  PMatrix entries;          // over params
  Polynomial nonvanishing;  // the determinant

  // Entries may use different variable lists; they are aligned here.
  static AutomorphismFamily FromEntries(const PMatrix& entries);

  // Throws std::invalid_argument if nonvanishing is zero at the assignment.
  RMatrix Instantiate(const Assignment& a) const;
};

PMatrix SymbolicOrbitR(const AutomorphismFamily& fam, const PMatrix& r);
PMatrix SymbolicOrbitR(const AutomorphismFamily& fam, const Bivector& r);

// Nonzero entries (i < j) of A r A^t - r.
std::vector<Polynomial> StabilizerCondition(const AutomorphismFamily& fam,
                                            const Bivector& r);

// A r A^t == r2 and, when given, A n A^{-1} == n2. Throws PreconditionError
// if A is not an automorphism of g.
bool VerifyWitness(const LieAlgebra& g, const RMatrix& a, const Bivector& r,
                   const Bivector& r2, const Endomorphism* n = nullptr,
                   const Endomorphism* n2 = nullptr);

struct SearchBudget {
  int grid_bound = 2;  // heights of the first half of the trials
  long trials = 10000;
  uint64_t seed = 1;
};

struct Witness {
  Assignment assignment;
  RMatrix matrix;
};

// Heuristic: linear elimination where possible, grid and random values for
// the rest. Every result passes VerifyWitness. A miss proves nothing.
std::optional<Witness> SearchWitness(const LieAlgebra& g,
                                     const AutomorphismFamily& fam,
                                     const Bivector& r, const Bivector& r2,
                                     const Endomorphism* n = nullptr,
                                     const Endomorphism* n2 = nullptr,
                                     const SearchBudget& budget = {});

}  // namespace rnstruct

#endif  // RNSTRUCT_EQUIVALENCE_H_
