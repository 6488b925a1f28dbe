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

#ifndef RNSTRUCT_CATALOG_H_
#define RNSTRUCT_CATALOG_H_

#include <cstdint>
#include <string>
#include <vector>

#include "rnstruct/equivalence.h"
#include "rnstruct/lie_algebra.h"
#include "rnstruct/pn.h"
#include "rnstruct/polynomial.h"

namespace rnstruct {

struct ParamConstraint {
  enum class Kind {
    kNonzero,      // every name in of
    kPositive,
    kNegative,
    kRange,        // lo < x < hi for every name in of
    kAnyNonzero,   // at least one of of
    kAnyZero,      // at least one of of
    kDistinct,     // pairwise different
    kNonzeroExpr,  // polynomial expr != 0
  };
  Kind kind = Kind::kNonzero;
  std::vector<std::string> of;
  Rational lo, hi;
  std::string expr;
};

// name = num / den, both polynomials in earlier names.
struct DerivedParam {
  std::string name;
  std::string num;
  std::string den;
};

struct WedgeExpr {
  int i, j;
  std::string expr;
};

struct BracketExpr {
  int i, j, k;
  std::string expr;
};

using ExprMatrix = std::vector<std::vector<std::string>>;

struct RClass {
  std::string id;
  bool invertible = false;
  std::vector<WedgeExpr> r;
  std::vector<ParamConstraint> constraints;
  std::vector<DerivedParam> derived;
  std::string note;
};

struct RNFamily {
  std::string label;
  std::vector<WedgeExpr> r;
  ExprMatrix n;
  std::vector<BracketExpr> dual;  // (i, j, m): f~^{ij}_m
  std::vector<ParamConstraint> constraints;
};

struct NClass {
  std::string id;
  ExprMatrix n;
  std::vector<ParamConstraint> constraints;
  std::string note;
};

struct CatalogEntry {
  std::string id;
  std::string name;
  std::vector<std::string> params;  // algebra family parameters
  Assignment defaults;
  std::vector<ParamConstraint> constraints;
  std::vector<DerivedParam> derived;
  int dim = 0;
  std::vector<BracketExpr> brackets;
  ExprMatrix automorphism;
  std::vector<RClass> r_classes;
  RNFamily rn;
  std::vector<NClass> n_classes;
  std::string json;  // this entry as stored
};

// Parsed once from the embedded data.
const std::vector<CatalogEntry>& LoadCatalog();
// Parses catalog text in the embedded format.
std::vector<CatalogEntry> ParseCatalog(const std::string& json_text);
// Matches id ("A41") or name ("A_{4,1}"); nullptr if absent.
const CatalogEntry* FindEntry(const std::string& key);

// Class ids: "algebra", "r1".."rN", "rn", "n1".."nM", "aut".
std::vector<std::string> ClassIds(const CatalogEntry& e);

// Deterministic for a fixed seed. Sample 0 uses the default algebra
// parameters; later samples draw them from their ranges. The result holds
// algebra, class and derived parameters. Throws std::runtime_error when the
// constraints cannot be met.
std::vector<Assignment> SampleParameters(const CatalogEntry& e,
                                         const std::string& class_id,
                                         uint64_t seed, int count);

// Throws std::invalid_argument if the assignment violates a constraint.
void CheckAssignment(const CatalogEntry& e, const std::string& class_id,
                     const Assignment& a);

LieAlgebra InstantiateAlgebra(const CatalogEntry& e, const Assignment& a);
// r classes, "rn", and n classes (which use the rn representative).
Bivector InstantiateR(const CatalogEntry& e, const std::string& class_id,
                      const Assignment& a);
// "rn" and n classes.
Endomorphism InstantiateN(const CatalogEntry& e, const std::string& class_id,
                          const Assignment& a);
RMatrix InstantiateAutomorphism(const CatalogEntry& e, const Assignment& a);
Tensor3 StoredDual(const CatalogEntry& e, const Assignment& a);

// Algebra parameters (defaults overridden by any matching names in
// overrides) plus derived values. Throws std::invalid_argument on a
// constraint violation.
Assignment AlgebraAssignment(const CatalogEntry& e, const Assignment& overrides);

// Automorphism family with the algebra parameters of a substituted.
AutomorphismFamily FamilyFor(const CatalogEntry& e, const Assignment& a);

struct CatalogFailure {
  std::string entry;
  std::string class_id;
  std::string assignment;
  std::string check;
};

struct CatalogReport {
  int entries = 0;
  long checks = 0;
  std::vector<CatalogFailure> failures;
  std::string ToText() const;
};

CatalogReport VerifyCatalog(uint64_t seed, int samples_per_class);
CatalogReport VerifyEntries(const std::vector<CatalogEntry>& entries,
                            uint64_t seed, int samples_per_class);

std::string FormatAssignment(const Assignment& a);

}  // namespace rnstruct

#endif  // RNSTRUCT_CATALOG_H_
