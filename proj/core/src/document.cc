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

#include "rnstruct/document.h"

#include <algorithm>

#include "json.hpp"
#include "rnstruct/parser.h"

namespace rnstruct {
namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw DocumentError(where + ": " + what);
}

Rational Number(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return ParseConstant(j.get<std::string>());
    } catch (const std::exception& e) {
      Fail(where, e.what());
    }
  }
  Fail(where, "expected an exact rational as a string or integer");
}

int Index(const json& j, int dim, const std::string& where) {
  if (!j.is_number_integer()) Fail(where, "expected an index");
  int i = j.get<int>();
  if (i < 1 || i > dim) Fail(where, "index out of range 1.." + std::to_string(dim));
  return i;
}

const json& Array(const json& j, const std::string& where) {
  if (!j.is_array()) Fail(where, "expected an array");
  return j;
}

RMatrix ParseMatrix(const json& j, const std::string& where, int dim = -1) {
  Array(j, where);
  int rows = static_cast<int>(j.size());
  if (dim >= 0 && rows != dim) Fail(where, "expected " + std::to_string(dim) + " rows");
  int cols = rows == 0 ? 0 : static_cast<int>(Array(j[0], where + "/0").size());
  RMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    std::string w = where + "/" + std::to_string(i);
    if (Array(j[i], w).size() != static_cast<size_t>(cols)) Fail(w, "ragged matrix");
    for (int c = 0; c < cols; ++c) {
      m(i, c) = Number(j[i][c], w + "/" + std::to_string(c));
    }
  }
  if (dim >= 0 && cols != dim) Fail(where, "expected a square matrix");
  return m;
}

int Dim(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<int>() < 1) {
    Fail(where, "expected a positive dimension");
  }
  return j.get<int>();
}

Bivector ParseBivector(const json& j, const std::string& where, int dim) {
  if (!j.is_object()) Fail(where, "expected an object");
  if (j.contains("dim")) dim = Dim(j["dim"], where + "/dim");
  try {
    if (j.contains("matrix")) {
      RMatrix m = ParseMatrix(j["matrix"], where + "/matrix", dim);
      if (!m.square()) Fail(where + "/matrix", "expected a square matrix");
      return Bivector::FromMatrix(std::move(m));
    }
    if (!j.contains("wedge")) Fail(where, "expected wedge or matrix");
    if (dim < 0) Fail(where, "dimension unknown; add dim or an algebra section");
    RMatrix m(dim, dim);
    const json& w = Array(j["wedge"], where + "/wedge");
    for (size_t t = 0; t < w.size(); ++t) {
      std::string wt = where + "/wedge/" + std::to_string(t);
      if (!w[t].is_array() || w[t].size() != 3) Fail(wt, "expected [i, j, c]");
      int i = Index(w[t][0], dim, wt + "/0"), k = Index(w[t][1], dim, wt + "/1");
      if (i == k) Fail(wt, "X_i ^ X_i vanishes");
      Rational c = Number(w[t][2], wt + "/2");
      m(i - 1, k - 1) += c;
      m(k - 1, i - 1) -= c;
    }
    return Bivector::FromMatrix(std::move(m));
  } catch (const std::invalid_argument& e) {
    Fail(where, e.what());
  }
}

void Pretty(const json& j, int depth, std::string& out) {
  std::string pad(depth + 1, ' '), close(depth, ' ');
  auto scalar = [](const json& x) { return !x.is_structured(); };
  if (j.is_array() && std::all_of(j.begin(), j.end(), scalar)) {
    out += "[";
    for (size_t i = 0; i < j.size(); ++i) {
      out += (i ? ", " : "") + j[i].dump();
    }
    out += "]";
    return;
  }
  if (j.is_array() && !j.empty()) {
    out += "[\n";
    for (size_t i = 0; i < j.size(); ++i) {
      out += pad;
      Pretty(j[i], depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
    return;
  }
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out += pad + json(k).dump() + ": ";
      Pretty(v, depth + 1, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
    return;
  }
  out += j.dump();
}

json RatJson(const Rational& x) { return ToString(x); }

json MatrixJson(const RMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(RatJson(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json BivectorJson(const Bivector& r, bool with_dim) {
  json w = json::array();
  for (const auto& t : r.Wedge()) w.push_back({t.i, t.j, RatJson(t.c)});
  json j = json::object();
  if (with_dim) j["dim"] = r.dim();
  j["wedge"] = w;
  return j;
}

}  // namespace

Document ParseDocument(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("syntax error at byte ") +
                        std::to_string(e.byte) + ": " + e.what());
  }
  if (!j.is_object()) Fail("/", "expected an object");
  static const std::vector<std::string> known = {
      "algebra", "r", "n", "automorphism", "phase_space",
      "realization", "representation", "parts"};
  for (const auto& [k, _] : j.items()) {
    if (std::find(known.begin(), known.end(), k) == known.end()) {
      Fail("/" + k, "unknown section");
    }
  }
  Document doc;
  int dim = -1;
  if (j.contains("algebra")) {
    const json& a = j["algebra"];
    if (!a.is_object()) Fail("/algebra", "expected an object");
    if (!a.contains("dim")) Fail("/algebra", "missing dim");
    dim = Dim(a["dim"], "/algebra/dim");
    std::vector<Bracket> bs;
    const json b = Array(a.value("brackets", json::array()), "/algebra/brackets");
    for (size_t t = 0; t < b.size(); ++t) {
      std::string w = "/algebra/brackets/" + std::to_string(t);
      if (!b[t].is_array() || b[t].size() != 4) Fail(w, "expected [i, j, k, c]");
      bs.push_back({Index(b[t][0], dim, w + "/0"), Index(b[t][1], dim, w + "/1"),
                    Index(b[t][2], dim, w + "/2"), Number(b[t][3], w + "/3")});
    }
    std::string name;
    if (a.contains("name")) {
      if (!a["name"].is_string()) Fail("/algebra/name", "expected a string");
      name = a["name"].get<std::string>();
    }
    try {
      doc.algebra = LieAlgebra::FromBrackets(dim, bs, name);
    } catch (const std::invalid_argument& e) {
      Fail("/algebra/brackets", e.what());
    }
  }
  if (j.contains("r")) doc.r = ParseBivector(j["r"], "/r", dim);
  if (j.contains("n")) {
    const json& n = j["n"];
    if (!n.is_object() || !n.contains("matrix")) Fail("/n", "expected {matrix}");
    RMatrix m = ParseMatrix(n["matrix"], "/n/matrix", dim);
    if (!m.square()) Fail("/n/matrix", "expected a square matrix");
    doc.n = Endomorphism{m};
  }
  if (j.contains("automorphism")) {
    const json& a = j["automorphism"];
    if (!a.is_object()) Fail("/automorphism", "expected an object");
    if (a.contains("matrix")) {
      doc.automorphism = ParseMatrix(a["matrix"], "/automorphism/matrix", dim);
    } else if (a.contains("family")) {
      if (!a["family"].is_string()) Fail("/automorphism/family", "expected a string");
      FamilyRef f{a["family"].get<std::string>(), {}};
      const json as = a.value("assignment", json::object());
      if (!as.is_object()) Fail("/automorphism/assignment", "expected an object");
      for (const auto& [k, v] : as.items()) {
        f.assignment[k] = Number(v, "/automorphism/assignment/" + k);
      }
      doc.automorphism_family = f;
    } else {
      Fail("/automorphism", "expected matrix or family");
    }
  }
  if (j.contains("phase_space")) {
    const json& p = j["phase_space"];
    if (!p.is_object() || !p.contains("dim")) Fail("/phase_space", "missing dim");
    int pd = Dim(p["dim"], "/phase_space/dim");
    if (pd % 2 != 0) Fail("/phase_space/dim", "phase space dimension must be even");
    try {
      if (!p.contains("pi")) {
        doc.phase_space = PhaseSpace::Canonical(pd / 2);
      } else {
        RMatrix pi(pd, pd);
        const json& e = Array(p["pi"], "/phase_space/pi");
        for (size_t t = 0; t < e.size(); ++t) {
          std::string w = "/phase_space/pi/" + std::to_string(t);
          if (!e[t].is_array() || e[t].size() != 3) Fail(w, "expected [i, j, c]");
          int a = Index(e[t][0], pd, w + "/0"), b = Index(e[t][1], pd, w + "/1");
          Rational c = Number(e[t][2], w + "/2");
          pi(a - 1, b - 1) += c;
          pi(b - 1, a - 1) -= c;
        }
        doc.phase_space = PhaseSpace::FromMatrix(std::move(pi));
      }
    } catch (const std::invalid_argument& e) {
      Fail("/phase_space", e.what());
    }
  }
  if (j.contains("realization")) {
    const json& s = j["realization"];
    if (!s.is_object() || !s.contains("S")) Fail("/realization", "expected {S}");
    if (!doc.phase_space) Fail("/realization", "requires a phase_space section");
    std::vector<Polynomial> polys;
    const json& arr = Array(s["S"], "/realization/S");
    for (size_t t = 0; t < arr.size(); ++t) {
      std::string w = "/realization/S/" + std::to_string(t);
      if (!arr[t].is_string()) Fail(w, "expected an expression string");
      try {
        polys.push_back(doc.phase_space->Parse(arr[t].get<std::string>()));
      } catch (const std::exception& e) {
        Fail(w, e.what());
      }
    }
    doc.realization = polys;
  }
  if (j.contains("representation")) {
    const json& r = j["representation"];
    if (!r.is_object() || !r.contains("T")) Fail("/representation", "expected {T}");
    std::vector<RMatrix> ts;
    const json& arr = Array(r["T"], "/representation/T");
    for (size_t t = 0; t < arr.size(); ++t) {
      ts.push_back(ParseMatrix(arr[t], "/representation/T/" + std::to_string(t)));
    }
    doc.representation = ts;
  }
  if (j.contains("parts")) {
    const json& arr = Array(j["parts"], "/parts");
    for (size_t t = 0; t < arr.size(); ++t) {
      doc.parts.push_back(ParseBivector(arr[t], "/parts/" + std::to_string(t), dim));
    }
  }
  return doc;
}

std::string PrintDocument(const Document& doc) {
  json j = json::object();
  bool with_dim = !doc.algebra.has_value();
  if (doc.algebra) {
    json b = json::array();
    for (const auto& x : doc.algebra->Brackets()) {
      b.push_back({x.i, x.j, x.k, RatJson(x.c)});
    }
    json a = json::object();
    if (!doc.algebra->name().empty()) a["name"] = doc.algebra->name();
    a["dim"] = doc.algebra->dim();
    a["brackets"] = b;
    j["algebra"] = a;
  }
  if (doc.r) j["r"] = BivectorJson(*doc.r, with_dim);
  if (doc.n) j["n"] = {{"matrix", MatrixJson(doc.n->m)}};
  if (doc.automorphism) {
    j["automorphism"] = {{"matrix", MatrixJson(*doc.automorphism)}};
  } else if (doc.automorphism_family) {
    json as = json::object();
    for (const auto& [k, v] : doc.automorphism_family->assignment) as[k] = RatJson(v);
    j["automorphism"] = {{"family", doc.automorphism_family->family},
                         {"assignment", as}};
  }
  if (doc.phase_space) {
    json pi = json::array();
    const RMatrix& m = doc.phase_space->pi;
    for (int a = 0; a < m.rows(); ++a) {
      for (int b = a + 1; b < m.cols(); ++b) {
        if (!IsZero(m(a, b))) pi.push_back({a + 1, b + 1, RatJson(m(a, b))});
      }
    }
    j["phase_space"] = {{"dim", doc.phase_space->dim()}, {"pi", pi}};
  }
  if (doc.realization) {
    json s = json::array();
    for (const auto& p : *doc.realization) s.push_back(p.ToString());
    j["realization"] = {{"S", s}};
  }
  if (doc.representation) {
    json t = json::array();
    for (const auto& m : *doc.representation) t.push_back(MatrixJson(m));
    j["representation"] = {{"T", t}};
  }
  if (!doc.parts.empty()) {
    json p = json::array();
    for (const auto& b : doc.parts) p.push_back(BivectorJson(b, with_dim));
    j["parts"] = p;
  }
  std::string out;
  Pretty(j, 0, out);
  return out + "\n";
}

std::string FormatJson(const std::string& json_text) {
  std::string out;
  Pretty(json::parse(json_text), 0, out);
  return out;
}

bool operator==(const Document& a, const Document& b) {
  auto same_alg = [](const std::optional<LieAlgebra>& x,
                     const std::optional<LieAlgebra>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || (x->dim() == y->dim() && x->name() == y->name() &&
                  x->constants() == y->constants());
  };
  auto same_biv = [](const Bivector& x, const Bivector& y) {
    return x.m == y.m && x.on_dual == y.on_dual;
  };
  if (!same_alg(a.algebra, b.algebra)) return false;
  if (a.r.has_value() != b.r.has_value() || (a.r && !same_biv(*a.r, *b.r))) {
    return false;
  }
  if (a.n.has_value() != b.n.has_value() || (a.n && a.n->m != b.n->m)) return false;
  if (a.automorphism != b.automorphism) return false;
  if (a.automorphism_family != b.automorphism_family) return false;
  if (a.phase_space.has_value() != b.phase_space.has_value() ||
      (a.phase_space && (a.phase_space->pi != b.phase_space->pi ||
                         a.phase_space->vars != b.phase_space->vars))) {
    return false;
  }
  if (a.realization != b.realization) return false;
  if (a.representation != b.representation) return false;
  if (a.parts.size() != b.parts.size()) return false;
  for (size_t i = 0; i < a.parts.size(); ++i) {
    if (!same_biv(a.parts[i], b.parts[i])) return false;
  }
  return true;
}

}  // namespace rnstruct
