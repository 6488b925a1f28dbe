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

#include "rnstruct/catalog.h"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rnstruct/parser.h"

namespace rnstruct {
namespace internal {
extern const char kCatalogJson[];
}  // namespace internal

namespace {

using json = nlohmann::ordered_json;

ParamConstraint::Kind KindFromString(const std::string& s) {
  using K = ParamConstraint::Kind;
  if (s == "nonzero") return K::kNonzero;
  if (s == "positive") return K::kPositive;
  if (s == "negative") return K::kNegative;
  if (s == "range") return K::kRange;
  if (s == "any_nonzero") return K::kAnyNonzero;
  if (s == "any_zero") return K::kAnyZero;
  if (s == "distinct") return K::kDistinct;
  if (s == "nonzero_expr") return K::kNonzeroExpr;
  throw std::invalid_argument("unknown constraint kind: " + s);
}

std::vector<ParamConstraint> ParseConstraints(const json& j) {
  std::vector<ParamConstraint> out;
  if (!j.is_array()) return out;
  for (const auto& c : j) {
    ParamConstraint pc;
    pc.kind = KindFromString(c.at("kind").get<std::string>());
    if (c.contains("of")) pc.of = c["of"].get<std::vector<std::string>>();
    if (c.contains("lo")) pc.lo = ParseConstant(c["lo"].get<std::string>());
    if (c.contains("hi")) pc.hi = ParseConstant(c["hi"].get<std::string>());
    if (c.contains("expr")) pc.expr = c["expr"].get<std::string>();
    out.push_back(std::move(pc));
  }
  return out;
}

std::vector<DerivedParam> ParseDerived(const json& j) {
  std::vector<DerivedParam> out;
  if (!j.is_array()) return out;
  for (const auto& d : j) {
    out.push_back({d.at("name"), d.at("num"), d.at("den")});
  }
  return out;
}

std::vector<WedgeExpr> ParseWedge(const json& j) {
  std::vector<WedgeExpr> out;
  for (const auto& t : j.at("wedge")) {
    out.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2)});
  }
  return out;
}

ExprMatrix ParseExprMatrix(const json& j) {
  return j.at("matrix").get<ExprMatrix>();
}

CatalogEntry ParseEntry(const json& j) {
  CatalogEntry e;
  e.id = j.at("id");
  e.name = j.at("name");
  if (j.contains("params")) {
    for (const auto& p : j["params"]) {
      std::string name = p.at("name");
      e.params.push_back(name);
      e.defaults[name] = ParseConstant(p.at("default").get<std::string>());
    }
  }
  e.constraints = ParseConstraints(j.value("constraints", json::array()));
  e.derived = ParseDerived(j.value("derived", json::array()));
  const json& alg = j.at("algebra");
  e.dim = alg.at("dim");
  for (const auto& b : alg.at("brackets")) {
    e.brackets.push_back(
        {b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>(), b.at(3)});
  }
  e.automorphism = ParseExprMatrix(j.at("automorphism"));
  for (const auto& r : j.at("r_classes")) {
    RClass c;
    c.id = r.at("id");
    c.invertible = r.value("invertible", false);
    c.r = ParseWedge(r.at("r"));
    c.constraints = ParseConstraints(r.value("constraints", json::array()));
    c.derived = ParseDerived(r.value("derived", json::array()));
    c.note = r.value("note", "");
    e.r_classes.push_back(std::move(c));
  }
  const json& rn = j.at("rn_family");
  e.rn.label = rn.value("label", "");
  e.rn.r = ParseWedge(rn.at("r"));
  e.rn.n = ParseExprMatrix(rn.at("n"));
  for (const auto& d : rn.at("dual")) {
    e.rn.dual.push_back(
        {d.at(0).get<int>(), d.at(1).get<int>(), d.at(2).get<int>(), d.at(3)});
  }
  e.rn.constraints = ParseConstraints(rn.value("constraints", json::array()));
  for (const auto& n : j.at("n_classes")) {
    NClass c;
    c.id = n.at("id");
    c.n = ParseExprMatrix(n.at("n"));
    c.constraints = ParseConstraints(n.value("constraints", json::array()));
    c.note = n.value("note", "");
    e.n_classes.push_back(std::move(c));
  }
  e.json = j.dump();
  return e;
}

// Everything needed to sample and check one class of an entry.
struct ClassSpace {
  std::vector<std::string> params;  // class parameters, first appearance
  std::vector<ParamConstraint> constraints;
  std::vector<DerivedParam> derived;
  bool automorphism = false;
};

const RClass* FindRClass(const CatalogEntry& e, const std::string& id) {
  for (const auto& c : e.r_classes) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const NClass* FindNClass(const CatalogEntry& e, const std::string& id) {
  for (const auto& c : e.n_classes) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

void CollectVars(const std::string& expr, std::vector<std::string>& out) {
  for (auto& v : ExpressionVariables(expr)) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
}

void CollectWedge(const std::vector<WedgeExpr>& w,
                  std::vector<std::string>& out) {
  for (const auto& t : w) CollectVars(t.expr, out);
}

void CollectMatrix(const ExprMatrix& m, std::vector<std::string>& out) {
  for (const auto& row : m) {
    for (const auto& x : row) CollectVars(x, out);
  }
}

ClassSpace SpaceFor(const CatalogEntry& e, const std::string& class_id) {
  ClassSpace s;
  std::vector<std::string> vars;
  if (class_id == "algebra") {
  } else if (class_id == "aut") {
    CollectMatrix(e.automorphism, vars);
    s.automorphism = true;
  } else if (class_id == "rn") {
    CollectWedge(e.rn.r, vars);
    CollectMatrix(e.rn.n, vars);
    s.constraints = e.rn.constraints;
  } else if (const RClass* r = FindRClass(e, class_id)) {
    CollectWedge(r->r, vars);
    s.constraints = r->constraints;
    s.derived = r->derived;
  } else if (const NClass* n = FindNClass(e, class_id)) {
    CollectWedge(e.rn.r, vars);
    CollectMatrix(n->n, vars);
    s.constraints = e.rn.constraints;
    s.constraints.insert(s.constraints.end(), n->constraints.begin(),
                         n->constraints.end());
  } else {
    throw std::invalid_argument("unknown class " + class_id + " in " + e.id);
  }
  std::set<std::string> skip(e.params.begin(), e.params.end());
  for (const auto& d : e.derived) skip.insert(d.name);
  for (const auto& d : s.derived) skip.insert(d.name);
  for (const auto& v : vars) {
    if (!skip.count(v)) s.params.push_back(v);
  }
  // Constraints may name parameters absent from the expressions.
  for (const auto& c : s.constraints) {
    for (const auto& v : c.of) {
      if (!skip.count(v) &&
          std::find(s.params.begin(), s.params.end(), v) == s.params.end()) {
        s.params.push_back(v);
      }
    }
  }
  return s;
}

std::vector<std::string> Names(const Assignment& a) {
  std::vector<std::string> v;
  for (const auto& [k, _] : a) v.push_back(k);
  return v;
}

Rational EvalExpr(const std::string& expr, const Assignment& a) {
  return ParsePolynomial(expr, Names(a)).Evaluate(a);
}

// Adds derived values; false if a denominator vanishes.
bool AddDerived(const std::vector<DerivedParam>& derived, Assignment& a) {
  for (const auto& d : derived) {
    Rational den = EvalExpr(d.den, a);
    if (IsZero(den)) return false;
    a[d.name] = EvalExpr(d.num, a) / den;
  }
  return true;
}

// Empty if satisfied, otherwise a description of the first violation.
std::string Violation(const std::vector<ParamConstraint>& cs,
                      const Assignment& a) {
  using K = ParamConstraint::Kind;
  auto value = [&](const std::string& v) {
    auto it = a.find(v);
    if (it == a.end()) throw std::invalid_argument("missing parameter " + v);
    return it->second;
  };
  for (const auto& c : cs) {
    switch (c.kind) {
      case K::kNonzero:
        for (const auto& v : c.of) {
          if (IsZero(value(v))) return v + " must be nonzero";
        }
        break;
      case K::kPositive:
        for (const auto& v : c.of) {
          if (value(v) <= 0) return v + " must be positive";
        }
        break;
      case K::kNegative:
        for (const auto& v : c.of) {
          if (value(v) >= 0) return v + " must be negative";
        }
        break;
      case K::kRange:
        for (const auto& v : c.of) {
          Rational x = value(v);
          if (!(c.lo < x && x < c.hi)) {
            return v + " must lie in (" + ToString(c.lo) + ", " +
                   ToString(c.hi) + ")";
          }
        }
        break;
      case K::kAnyNonzero: {
        bool any = false;
        for (const auto& v : c.of) any = any || !IsZero(value(v));
        if (!any) return "one of the parameters must be nonzero";
        break;
      }
      case K::kAnyZero: {
        bool any = false;
        for (const auto& v : c.of) any = any || IsZero(value(v));
        if (!any) return "one of the parameters must be zero";
        break;
      }
      case K::kDistinct:
        for (size_t i = 0; i < c.of.size(); ++i) {
          for (size_t j = i + 1; j < c.of.size(); ++j) {
            if (value(c.of[i]) == value(c.of[j])) {
              return c.of[i] + " and " + c.of[j] + " must differ";
            }
          }
        }
        break;
      case K::kNonzeroExpr:
        if (IsZero(EvalExpr(c.expr, a))) return c.expr + " must be nonzero";
        break;
    }
  }
  return "";
}

uint64_t Fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

// Unary bounds on one parameter, gathered from the constraint list.
struct Bounds {
  bool nonzero = false;
  bool ranged = false;
  Rational lo, hi;
};

Bounds BoundsFor(const std::string& v, const std::vector<ParamConstraint>& cs) {
  using K = ParamConstraint::Kind;
  Bounds b;
  bool has_lo = false, has_hi = false;
  auto raise_lo = [&](const Rational& x) {
    if (!has_lo || x > b.lo) b.lo = x;
    has_lo = true;
  };
  auto lower_hi = [&](const Rational& x) {
    if (!has_hi || x < b.hi) b.hi = x;
    has_hi = true;
  };
  for (const auto& c : cs) {
    if (std::find(c.of.begin(), c.of.end(), v) == c.of.end()) continue;
    switch (c.kind) {
      case K::kNonzero:
        b.nonzero = true;
        break;
      case K::kPositive:
        raise_lo(0);
        break;
      case K::kNegative:
        lower_hi(0);
        break;
      case K::kRange:
        raise_lo(c.lo);
        lower_hi(c.hi);
        break;
      default:
        break;
    }
  }
  if (has_lo || has_hi) {
    b.ranged = true;
    if (!has_lo) b.lo = b.hi - 10;
    if (!has_hi) b.hi = b.lo + 10;
  }
  return b;
}

class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  // Denominators up to 10; unbounded values have numerators in [-10, 10].
  Rational Draw(const Bounds& b) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      long den = Uniform(1, 10);
      Rational x;
      if (b.ranged) {
        Rational lo = b.lo * den, hi = b.hi * den;
        mpz_class first, last;
        mpz_fdiv_q(first.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
        mpz_cdiv_q(last.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
        ++first;  // strictly inside the open interval
        --last;
        if (first > last) continue;
        mpz_class span = last - first;
        long off = Uniform(0, span.get_si());
        x = Rational(mpz_class(first + off), den);
      } else {
        // "Any" parameters are zero a quarter of the time.
        if (!b.nonzero && Uniform(0, 3) == 0) return 0;
        x = Rational(Uniform(-10, 10), den);
      }
      x.canonicalize();
      if (b.nonzero && IsZero(x)) continue;
      return x;
    }
    throw std::runtime_error("empty parameter range");
  }

  long Uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

 private:
  std::mt19937_64 rng_;
};

bool DrawAll(Sampler& s, const std::vector<std::string>& params,
             const std::vector<ParamConstraint>& cs, Assignment& a) {
  using K = ParamConstraint::Kind;
  for (const auto& p : params) a[p] = s.Draw(BoundsFor(p, cs));
  // Force a zero for any_zero groups so rejection is not left to chance.
  for (const auto& c : cs) {
    if (c.kind != K::kAnyZero) continue;
    std::vector<std::string> free;
    for (const auto& v : c.of) {
      Bounds b = BoundsFor(v, cs);
      if (!b.nonzero && !b.ranged) free.push_back(v);
    }
    if (free.empty()) return false;
    a[free[s.Uniform(0, static_cast<long>(free.size()) - 1)]] = 0;
  }
  return true;
}

}  // namespace

std::vector<CatalogEntry> ParseCatalog(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("catalog: ") + ex.what());
  }
  std::vector<CatalogEntry> out;
  try {
    for (const auto& e : j.at("entries")) out.push_back(ParseEntry(e));
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("catalog: ") + ex.what());
  }
  return out;
}

const std::vector<CatalogEntry>& LoadCatalog() {
  static const std::vector<CatalogEntry> entries =
      ParseCatalog(internal::kCatalogJson);
  return entries;
}

const CatalogEntry* FindEntry(const std::string& key) {
  for (const auto& e : LoadCatalog()) {
    if (e.id == key || e.name == key) return &e;
  }
  return nullptr;
}

std::vector<std::string> ClassIds(const CatalogEntry& e) {
  std::vector<std::string> ids = {"algebra"};
  for (const auto& r : e.r_classes) ids.push_back(r.id);
  ids.push_back("rn");
  for (const auto& n : e.n_classes) ids.push_back(n.id);
  ids.push_back("aut");
  return ids;
}

std::vector<Assignment> SampleParameters(const CatalogEntry& e,
                                         const std::string& class_id,
                                         uint64_t seed, int count) {
  ClassSpace space = SpaceFor(e, class_id);
  Sampler s(seed ^ Fnv1a(e.id + "/" + class_id));
  std::vector<Assignment> out;
  for (int k = 0; k < count; ++k) {
    bool done = false;
    for (int attempt = 0; attempt < 2000 && !done; ++attempt) {
      Assignment a;
      if (k == 0) {
        a = e.defaults;
      } else if (!DrawAll(s, e.params, e.constraints, a)) {
        continue;
      }
      if (!Violation(e.constraints, a).empty()) continue;
      if (!AddDerived(e.derived, a)) continue;
      if (!DrawAll(s, space.params, space.constraints, a)) continue;
      if (!AddDerived(space.derived, a)) continue;
      if (!Violation(space.constraints, a).empty()) continue;
      if (space.automorphism && IsZero(Determinant(InstantiateAutomorphism(e, a)))) {
        continue;
      }
      out.push_back(std::move(a));
      done = true;
    }
    if (!done) {
      throw std::runtime_error("cannot satisfy the constraints of " + e.id +
                               "/" + class_id);
    }
  }
  return out;
}

void CheckAssignment(const CatalogEntry& e, const std::string& class_id,
                     const Assignment& a) {
  ClassSpace space = SpaceFor(e, class_id);
  std::string v = Violation(e.constraints, a);
  if (v.empty()) v = Violation(space.constraints, a);
  if (!v.empty()) {
    throw std::invalid_argument(e.id + "/" + class_id + ": " + v);
  }
}

LieAlgebra InstantiateAlgebra(const CatalogEntry& e, const Assignment& a) {
  std::vector<Bracket> bs;
  for (const auto& b : e.brackets) {
    Rational c = EvalExpr(b.expr, a);
    if (!IsZero(c)) bs.push_back({b.i, b.j, b.k, c});
  }
  return LieAlgebra::FromBrackets(e.dim, bs, e.name);
}

Bivector InstantiateR(const CatalogEntry& e, const std::string& class_id,
                      const Assignment& a) {
  const std::vector<WedgeExpr>* w = nullptr;
  if (const RClass* r = FindRClass(e, class_id)) {
    w = &r->r;
  } else if (class_id == "rn" || FindNClass(e, class_id)) {
    w = &e.rn.r;
  } else {
    throw std::invalid_argument("no r-matrix for class " + class_id);
  }
  RMatrix m(e.dim, e.dim);
  for (const auto& t : *w) {
    Rational c = EvalExpr(t.expr, a);
    m(t.i - 1, t.j - 1) += c;
    m(t.j - 1, t.i - 1) -= c;
  }
  return Bivector::FromMatrix(std::move(m));
}

Endomorphism InstantiateN(const CatalogEntry& e, const std::string& class_id,
                          const Assignment& a) {
  const ExprMatrix* src = nullptr;
  if (class_id == "rn") {
    src = &e.rn.n;
  } else if (const NClass* n = FindNClass(e, class_id)) {
    src = &n->n;
  } else {
    throw std::invalid_argument("no endomorphism for class " + class_id);
  }
  RMatrix m(e.dim, e.dim);
  for (int i = 0; i < e.dim; ++i) {
    for (int j = 0; j < e.dim; ++j) m(i, j) = EvalExpr((*src)[i][j], a);
  }
  return {m};
}

RMatrix InstantiateAutomorphism(const CatalogEntry& e, const Assignment& a) {
  RMatrix m(e.dim, e.dim);
  for (int i = 0; i < e.dim; ++i) {
    for (int j = 0; j < e.dim; ++j) {
      m(i, j) = EvalExpr(e.automorphism[i][j], a);
    }
  }
  return m;
}

Tensor3 StoredDual(const CatalogEntry& e, const Assignment& a) {
  Tensor3 t(e.dim);
  for (const auto& d : e.rn.dual) {
    Rational c = EvalExpr(d.expr, a);
    t.at(d.i - 1, d.j - 1, d.k - 1) += c;
    t.at(d.j - 1, d.i - 1, d.k - 1) -= c;
  }
  return t;
}

Assignment AlgebraAssignment(const CatalogEntry& e,
                             const Assignment& overrides) {
  Assignment a = e.defaults;
  for (const auto& p : e.params) {
    auto it = overrides.find(p);
    if (it != overrides.end()) a[p] = it->second;
  }
  std::string v = Violation(e.constraints, a);
  if (!v.empty()) throw std::invalid_argument(e.id + ": " + v);
  if (!AddDerived(e.derived, a)) {
    throw std::invalid_argument(e.id + ": derived parameter has zero denominator");
  }
  return a;
}

AutomorphismFamily FamilyFor(const CatalogEntry& e, const Assignment& a) {
  Assignment fixed;
  for (const auto& p : e.params) fixed[p] = a.at(p);
  for (const auto& d : e.derived) fixed[d.name] = a.at(d.name);
  std::vector<std::string> vars;
  CollectMatrix(e.automorphism, vars);
  std::vector<std::string> free;
  for (const auto& v : vars) {
    if (!fixed.count(v)) free.push_back(v);
  }
  std::vector<std::string> all = free;
  for (const auto& [k, _] : fixed) all.push_back(k);
  PMatrix m(e.dim, e.dim);
  for (int i = 0; i < e.dim; ++i) {
    for (int j = 0; j < e.dim; ++j) {
      Polynomial p = ParsePolynomial(e.automorphism[i][j], all);
      m(i, j) = p.Substitute(fixed).Aligned(free);
    }
  }
  return AutomorphismFamily::FromEntries(m);
}

std::string FormatAssignment(const Assignment& a) {
  std::string s = "{";
  bool first = true;
  for (const auto& [k, v] : a) {
    if (!first) s += ", ";
    s += k + "=" + ToString(v);
    first = false;
  }
  return s + "}";
}

std::string CatalogReport::ToText() const {
  std::ostringstream os;
  for (const auto& f : failures) {
    os << "FAIL " << f.entry << " " << f.class_id << " " << f.check << " at "
       << f.assignment << "\n";
  }
  os << entries << " entries, " << checks << " checks, " << failures.size()
     << " failures\n";
  return os.str();
}

namespace {

std::string JoinInts(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x + 1);
  return s;
}

std::string RNFailures(const RNReport& r) {
  std::string s;
  auto add = [&](bool ok, const char* name) {
    if (!ok) s += (s.empty() ? "" : ",") + std::string(name);
  };
  add(r.cybe, "cybe");
  add(r.torsion, "torsion");
  add(r.con1, "con1");
  add(r.concomitant, "concomitant");
  return s;
}

// Returns the failed checks for one sample; empty if all pass.
std::vector<std::string> CheckSample(const CatalogEntry& e,
                                     const std::string& cls,
                                     const Assignment& a) {
  std::vector<std::string> bad;
  LieAlgebra g = InstantiateAlgebra(e, a);
  if (cls == "algebra") {
    if (!CheckJacobi(g).empty()) bad.push_back("jacobi");
  } else if (cls == "aut") {
    if (!IsAutomorphism(g, InstantiateAutomorphism(e, a))) {
      bad.push_back("automorphism");
    }
  } else if (cls == "rn" || FindNClass(e, cls)) {
    Bivector r = InstantiateR(e, cls, a);
    Endomorphism n = InstantiateN(e, cls, a);
    RNReport rep = CheckRN(g, r, n);
    if (!rep.ok()) bad.push_back("rn(" + RNFailures(rep) + ")");
    if (cls == "rn") {
      Tensor3 d = SklyaninDual(g, r);
      Tensor3 s = StoredDual(e, a);
      bool same = true;
      for (int i = 0; i < e.dim && same; ++i) {
        for (int j = 0; j < e.dim && same; ++j) {
          for (int m = 0; m < e.dim && same; ++m) {
            same = d.at(i, j, m) == s.at(i, j, m);
          }
        }
      }
      if (!same) bad.push_back("dual");
      if (IsZero(Determinant(r.m))) {
        bad.push_back("invertible");
      } else if (rep.cybe && !CheckBiRMatrix(g, r)) {
        bad.push_back("bi-r-matrix");
      }
    }
  } else {
    const RClass* rc = FindRClass(e, cls);
    Bivector r = InstantiateR(e, cls, a);
    std::vector<int> f = CybeMatrixFailures(g, r);
    if (!f.empty()) bad.push_back("cybe(" + JoinInts(f) + ")");
    if (rc->invertible && IsZero(Determinant(r.m))) {
      bad.push_back("invertible");
    }
  }
  return bad;
}

}  // namespace

CatalogReport VerifyEntries(const std::vector<CatalogEntry>& entries,
                            uint64_t seed, int samples_per_class) {
  CatalogReport rep;
  rep.entries = static_cast<int>(entries.size());
  for (const auto& e : entries) {
    for (const auto& cls : ClassIds(e)) {
      std::vector<Assignment> samples;
      try {
        samples = SampleParameters(e, cls, seed, samples_per_class);
      } catch (const std::exception& ex) {
        rep.failures.push_back({e.id, cls, "{}", std::string("sampling: ") + ex.what()});
        continue;
      }
      for (const auto& a : samples) {
        ++rep.checks;
        std::vector<std::string> bad;
        try {
          bad = CheckSample(e, cls, a);
        } catch (const std::exception& ex) {
          bad.push_back(std::string("error: ") + ex.what());
        }
        for (auto& b : bad) {
          rep.failures.push_back({e.id, cls, FormatAssignment(a), b});
        }
      }
    }
  }
  return rep;
}

CatalogReport VerifyCatalog(uint64_t seed, int samples_per_class) {
  return VerifyEntries(LoadCatalog(), seed, samples_per_class);
}

}  // namespace rnstruct
