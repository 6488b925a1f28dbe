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

#ifndef RNSTRUCT_DOCUMENT_H_
#define RNSTRUCT_DOCUMENT_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rnstruct/integrable.h"
#include "rnstruct/lie_algebra.h"
#include "rnstruct/matrix.h"
#include "rnstruct/pn.h"
#include "rnstruct/polynomial.h"

namespace rnstruct {

// Message carries the location: a byte offset for syntax errors, a JSON
// pointer such as /r/wedge/2 for semantic ones.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Automorphism by catalog family id plus parameter values.
struct FamilyRef {
  std::string family;
  Assignment assignment;
  friend bool operator==(const FamilyRef&, const FamilyRef&) = default;
};

// Every section is optional. Indices are 1-based and every number is an
// exact rational written as a string ("3", "-1/2").
struct Document {
  std::optional<LieAlgebra> algebra;
  std::optional<Bivector> r;
  std::optional<Endomorphism> n;
  std::optional<RMatrix> automorphism;
  std::optional<FamilyRef> automorphism_family;
  std::optional<PhaseSpace> phase_space;
  std::optional<std::vector<Polynomial>> realization;  // over phase_space
  std::optional<std::vector<RMatrix>> representation;
  std::vector<Bivector> parts;
};

Document ParseDocument(const std::string& text);
std::string PrintDocument(const Document& doc);
bool operator==(const Document& a, const Document& b);

// Re-indents JSON text, keeping arrays of scalars on one line.
std::string FormatJson(const std::string& json_text);

}  // namespace rnstruct

#endif  // RNSTRUCT_DOCUMENT_H_
