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

#include "cli.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rnstruct/catalog.h"
#include "rnstruct/document.h"
#include "rnstruct/equivalence.h"
#include "rnstruct/integrable.h"
#include "rnstruct/parser.h"
#include "rnstruct/pn.h"

namespace rnstruct::cli {
namespace {

using ojson = nlohmann::ordered_json;

// Input problems; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Document Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return ParseDocument(ss.str());
  } catch (const DocumentError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

const LieAlgebra& NeedAlgebra(const Document& d, const std::string& path) {
  if (!d.algebra) throw UsageError(path + ": missing algebra section");
  return *d.algebra;
}

const Bivector& NeedR(const Document& d, const std::string& path) {
  if (!d.r) throw UsageError(path + ": missing r section");
  if (d.algebra && d.r->dim() != d.algebra->dim()) {
    throw UsageError(path + ": r does not match the algebra dimension");
  }
  return *d.r;
}

const Endomorphism& NeedN(const Document& d, const std::string& path) {
  if (!d.n) throw UsageError(path + ": missing n section");
  if (d.algebra && d.n->dim() != d.algebra->dim()) {
    throw UsageError(path + ": n does not match the algebra dimension");
  }
  return *d.n;
}

std::string Term(const Rational& c, const std::string& basis, bool first) {
  std::string s;
  Rational a = abs(c);
  if (c < 0) {
    s = first ? "-" : " - ";
  } else if (!first) {
    s = " + ";
  }
  if (a != 1) s += ToString(a) + "*";
  return s + basis;
}

std::string WedgeString(const Bivector& r) {
  std::string s;
  for (const auto& t : r.Wedge()) {
    s += Term(t.c, "X" + std::to_string(t.i) + "^X" + std::to_string(t.j),
              s.empty());
  }
  return s.empty() ? "0" : s;
}

std::string Combination(const std::vector<Rational>& c, const std::string& x) {
  std::string s;
  for (size_t i = 0; i < c.size(); ++i) {
    if (!IsZero(c[i])) s += Term(c[i], x + std::to_string(i + 1), s.empty());
  }
  return s.empty() ? "0" : s;
}

ojson EndoJson(const Endomorphism& n) {
  ojson cols = ojson::array();
  for (int j = 0; j < n.dim(); ++j) {
    cols.push_back("n(X" + std::to_string(j + 1) + ") = " +
                   Combination(n.m.Column(j), "X"));
  }
  return cols;
}

ojson IndexList(const std::vector<int>& v) {
  ojson a = ojson::array();
  for (int i : v) a.push_back(i + 1);
  return a;
}

ojson PairList(const IndexPairs& v) {
  ojson a = ojson::array();
  for (const auto& [i, j] : v) {
    a.push_back("(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  }
  return a;
}

std::string Status(bool ok) { return ok ? "OK" : "FAIL"; }

// Human rendering of a report: one "key: value" line per leaf, one line per
// string in an array.
void Render(const ojson& j, std::ostream& os, const std::string& prefix = "") {
  for (const auto& [k, v] : j.items()) {
    std::string key = prefix + k;
    if (v.is_object()) {
      Render(v, os, key + ".");
    } else if (v.is_array()) {
      bool scalars = std::all_of(v.begin(), v.end(),
                                 [](const ojson& x) { return x.is_number(); });
      if (v.empty()) {
        os << key << ": none\n";
      } else if (scalars) {
        os << key << ":";
        for (const auto& x : v) os << " " << x.dump();
        os << "\n";
      } else {
        for (size_t i = 0; i < v.size(); ++i) {
          if (v[i].is_object()) {
            Render(v[i], os, key + "[" + std::to_string(i + 1) + "].");
          } else {
            os << key << ": "
               << (v[i].is_string() ? v[i].get<std::string>() : v[i].dump())
               << "\n";
          }
        }
      }
    } else if (v.is_string()) {
      os << key << ": " << v.get<std::string>() << "\n";
    } else {
      os << key << ": " << v.dump() << "\n";
    }
  }
}

struct Context {
  bool json = false;
  std::ostream& out;
};

int Emit(const Context& ctx, ojson rep, bool ok) {
  rep["status"] = Status(ok);
  if (ctx.json) {
    ctx.out << FormatJson(rep.dump()) << "\n";
  } else {
    Render(rep, ctx.out);
  }
  return ok ? kPass : kFail;
}

int VerifyAlgebra(const Context& ctx, const std::string& file) {
  Document d = Load(file);
  const LieAlgebra& g = NeedAlgebra(d, file);
  auto bad = CheckJacobi(g);
  ojson rep;
  rep["algebra"] = g.name().empty() ? "(unnamed)" : g.name();
  rep["dim"] = g.dim();
  ojson fails = ojson::array();
  for (const auto& q : bad) {
    fails.push_back("jacobi (" + std::to_string(q[0] + 1) + "," +
                    std::to_string(q[1] + 1) + "," + std::to_string(q[2] + 1) +
                    ") component " + std::to_string(q[3] + 1));
  }
  rep["jacobi"] = Status(bad.empty());
  rep["failures"] = fails;
  return Emit(ctx, rep, bad.empty());
}

int VerifyR(const Context& ctx, const std::string& file) {
  Document d = Load(file);
  const LieAlgebra& g = NeedAlgebra(d, file);
  const Bivector& r = NeedR(d, file);
  std::vector<int> bad = CybeMatrixFailures(g, r);
  ojson rep;
  rep["r"] = WedgeString(r);
  rep["cybe"] = Status(bad.empty());
  if (!bad.empty()) {
    rep["first_failing_i"] = bad.front() + 1;
    rep["failing_i"] = IndexList(bad);
  }
  rep["invertible"] = !IsZero(Determinant(r.m));
  return Emit(ctx, rep, bad.empty());
}

int VerifyN(const Context& ctx, const std::string& file) {
  Document d = Load(file);
  const LieAlgebra& g = NeedAlgebra(d, file);
  const Endomorphism& n = NeedN(d, file);
  std::vector<int> bad = NijenhuisMatrixFailures(g, n);
  ojson rep;
  rep["n"] = EndoJson(n);
  rep["nijenhuis"] = Status(bad.empty());
  if (!bad.empty()) rep["failing_i"] = IndexList(bad);
  return Emit(ctx, rep, bad.empty());
}

int VerifyRN(const Context& ctx, const std::string& file) {
  Document d = Load(file);
  const LieAlgebra& g = NeedAlgebra(d, file);
  const Bivector& r = NeedR(d, file);
  const Endomorphism& n = NeedN(d, file);
  RNReport rn = CheckRN(g, r, n);
  ojson rep;
  rep["r"] = WedgeString(r);
  rep["n"] = EndoJson(n);
  rep["cybe"] = Status(rn.cybe);
  rep["nijenhuis"] = Status(rn.torsion);
  rep["con1"] = Status(rn.con1);
  rep["concomitant"] = Status(rn.concomitant);
  if (!rn.cybe) rep["cybe_failing_i"] = IndexList(CybeMatrixFailures(g, r));
  if (!rn.torsion) {
    rep["nijenhuis_failing_i"] = IndexList(NijenhuisMatrixFailures(g, n));
  }
  if (!rn.concomitant) {
    rep["concomitant_failing_i"] = IndexList(ConcomitantMatrixFailures(g, r, n));
  }
  return Emit(ctx, rep, rn.ok());
}

ojson TensorBrackets(const Tensor3& t, const std::string& x) {
  ojson out = ojson::array();
  for (int i = 0; i < t.dim(); ++i) {
    for (int j = i + 1; j < t.dim(); ++j) {
      std::vector<Rational> c(t.dim());
      bool any = false;
      for (int m = 0; m < t.dim(); ++m) {
        c[m] = t.at(i, j, m);
        any = any || !IsZero(c[m]);
      }
      if (!any) continue;
      out.push_back("[" + x + std::to_string(i + 1) + ", " + x +
                    std::to_string(j + 1) + "] = " + Combination(c, x));
    }
  }
  return out;
}

int Dual(const Context& ctx, const std::string& file) {
  Document d = Load(file);
  const LieAlgebra& g = NeedAlgebra(d, file);
  const Bivector& r = NeedR(d, file);
  bool cybe = CheckCybeMatrix(g, r);
  Tensor3 t = SklyaninDual(g, r);
  ojson rep;
  rep["r"] = WedgeString(r);
  rep["dual"] = TensorBrackets(t, "X^");
  ojson constants = ojson::array();
  for (const auto& idx : t.NonzeroIndices()) {
    if (idx[0] < idx[1]) {
      constants.push_back({idx[0] + 1, idx[1] + 1, idx[2] + 1,
                           ToString(t.at(idx[0], idx[1], idx[2]))});
    }
  }
  rep["constants"] = constants;
  rep["cybe"] = Status(cybe);
  return Emit(ctx, rep, cybe);
}

int HierarchyCmd(const Context& ctx, const std::string& file, int k) {
  if (k < 1) throw UsageError("--k must be at least 1");
  Document d = Load(file);
  const LieAlgebra& g = NeedAlgebra(d, file);
  const Bivector& r = NeedR(d, file);
  const Endomorphism& n = NeedN(d, file);
  ojson rep;
  if (!CheckRN(g, r, n).ok()) {
    rep["error"] = "(r, n) is not an r-n structure";
    return Emit(ctx, rep, false);
  }
  std::vector<Bivector> rs = {r};
  for (const auto& x : Hierarchy(g, r, n, k)) rs.push_back(x);
  bool ok = true;
  ojson levels = ojson::array();
  for (size_t i = 0; i < rs.size(); ++i) {
    bool cybe = CheckCybeMatrix(g, rs[i]);
    ok = ok && cybe;
    levels.push_back("r_" + std::to_string(i) + " = " + WedgeString(rs[i]) +
                     "  cybe " + Status(cybe));
  }
  ojson bad = ojson::array();
  for (size_t i = 0; i < rs.size(); ++i) {
    for (size_t j = i + 1; j < rs.size(); ++j) {
      bool c = CheckCybeMatrix(g, rs[i]) && CheckCybeMatrix(g, rs[j]) &&
               CheckRCompatible(g, rs[i], rs[j]);
      if (!c) bad.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  ok = ok && bad.empty();
  rep["levels"] = levels;
  rep["incompatible_pairs"] = bad;
  return Emit(ctx, rep, ok);
}

int Compat(const Context& ctx, const std::string& f1, const std::string& f2) {
  Document a = Load(f1), b = Load(f2);
  const LieAlgebra& g = NeedAlgebra(a, f1);
  if (b.algebra && b.algebra->constants() != g.constants()) {
    throw UsageError("the two documents use different algebras");
  }
  ojson rep;
  bool ok = false;
  if (a.r && a.n && b.r && b.n) {
    rep["kind"] = "rn-rn";
    bool valid = CheckRN(g, NeedR(a, f1), NeedN(a, f1)).ok() &&
                 CheckRN(g, NeedR(b, f2), NeedN(b, f2)).ok();
    if (!valid) {
      rep["error"] = "both inputs must be r-n structures";
    } else {
      ok = CheckRNCompatible(g, *a.r, *a.n, *b.r, *b.n);
    }
  } else if (a.r && b.r) {
    rep["kind"] = "r-r";
    const Bivector& r1 = NeedR(a, f1);
    const Bivector& r2 = NeedR(b, f2);
    if (!CheckCybeMatrix(g, r1) || !CheckCybeMatrix(g, r2)) {
      rep["error"] = "both inputs must solve the CYBE";
    } else {
      ok = CheckRCompatible(g, r1, r2);
    }
  } else if (a.n && b.n) {
    rep["kind"] = "n-n";
    const Endomorphism& n1 = NeedN(a, f1);
    const Endomorphism& n2 = NeedN(b, f2);
    if (!CheckNijenhuisMatrix(g, n1) || !CheckNijenhuisMatrix(g, n2)) {
      rep["error"] = "both inputs must be Nijenhuis";
    } else {
      ok = CheckNCompatible(g, n1, n2);
    }
  } else {
    throw UsageError("documents must both carry r, n, or r and n");
  }
  rep["compatible"] = ok;
  return Emit(ctx, rep, ok);
}

int ConstructN(const Context& ctx, const std::string& f1, const std::string& f2) {
  Document a = Load(f1), b = Load(f2);
  const LieAlgebra& g = NeedAlgebra(a, f1);
  const Bivector& r = NeedR(a, f1);
  const Bivector& r2 = NeedR(b, f2);
  if (r2.dim() != g.dim()) throw UsageError("dimension mismatch");
  ojson rep;
  std::string why;
  if (IsZero(Determinant(r.m))) {
    why = "r is not invertible";
  } else if (!CheckCybeMatrix(g, r) || !CheckCybeMatrix(g, r2)) {
    why = "both inputs must solve the CYBE";
  } else if (!CheckRCompatible(g, r, r2)) {
    why = "r and r2 are not compatible";
  }
  if (!why.empty()) {
    rep["error"] = why;
    return Emit(ctx, rep, false);
  }
  Endomorphism n = NFromPair(g, r, r2);
  Document out;
  out.algebra = g;
  out.r = r;
  out.n = n;
  rep["n"] = EndoJson(n);
  rep["rn"] = Status(CheckRN(g, r, n).ok());
  rep["document"] = ojson::parse(PrintDocument(out));
  return Emit(ctx, rep, true);
}

const CatalogEntry& NeedEntry(const std::string& key) {
  const CatalogEntry* e = FindEntry(key);
  if (!e) throw UsageError("no catalog entry " + key);
  return *e;
}

// Family from --family, the document's automorphism section, or the
// catalog entry named like the algebra.
AutomorphismFamily ResolveFamily(const Document& d, const std::string& family) {
  std::string key = family;
  Assignment overrides;
  if (key.empty() && d.automorphism_family) {
    key = d.automorphism_family->family;
    overrides = d.automorphism_family->assignment;
  }
  if (key.empty() && d.algebra) key = d.algebra->name();
  if (key.empty()) throw UsageError("no automorphism family; pass --family");
  const CatalogEntry& e = NeedEntry(key);
  try {
    return FamilyFor(e, AlgebraAssignment(e, overrides));
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
}

RMatrix WitnessMatrix(const Document& w, const std::string& path) {
  if (w.automorphism) return *w.automorphism;
  if (!w.automorphism_family) throw UsageError(path + ": missing automorphism");
  const CatalogEntry& e = NeedEntry(w.automorphism_family->family);
  const Assignment& as = w.automorphism_family->assignment;
  try {
    AutomorphismFamily fam = FamilyFor(e, AlgebraAssignment(e, as));
    for (const auto& p : fam.params) {
      if (!as.count(p)) throw UsageError(path + ": missing value for " + p);
    }
    return Evaluate(fam.entries, as);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(path + ": " + ex.what());
  }
}

int Equiv(const Context& ctx, const std::string& f1, const std::string& f2,
          const std::string& witness, bool search, long budget, uint64_t seed,
          const std::string& family) {
  Document a = Load(f1), b = Load(f2);
  const LieAlgebra& g = NeedAlgebra(a, f1);
  const Bivector& r = NeedR(a, f1);
  const Bivector& r2 = NeedR(b, f2);
  if (r2.dim() != g.dim()) throw UsageError("dimension mismatch");
  if (a.n.has_value() != b.n.has_value()) {
    throw UsageError("either both documents carry n or neither does");
  }
  const Endomorphism* n = a.n ? &NeedN(a, f1) : nullptr;
  const Endomorphism* n2 = b.n ? &NeedN(b, f2) : nullptr;
  ojson rep;
  if (!witness.empty()) {
    Document w = Load(witness);
    RMatrix m = WitnessMatrix(w, witness);
    if (m.rows() != g.dim() || m.cols() != g.dim()) {
      throw UsageError(witness + ": dimension mismatch");
    }
    rep["witness"] = ToString(m);
    if (!IsAutomorphism(g, m)) {
      rep["error"] = "witness is not an automorphism";
      return Emit(ctx, rep, false);
    }
    bool ok = VerifyWitness(g, m, r, r2, n, n2);
    rep["verified"] = ok;
    return Emit(ctx, rep, ok);
  }
  if (!search) throw UsageError("equiv needs --witness or --search");
  AutomorphismFamily fam = ResolveFamily(a, family);
  SearchBudget sb;
  sb.trials = budget;
  sb.seed = seed;
  std::optional<Witness> found = SearchWitness(g, fam, r, r2, n, n2, sb);
  if (!found) {
    rep["result"] = "no witness found (budget " + std::to_string(budget) + ")";
    return Emit(ctx, rep, false);
  }
  ojson as = ojson::object();
  for (const auto& [k, v] : found->assignment) as[k] = ToString(v);
  rep["result"] = "witness found";
  rep["assignment"] = as;
  rep["matrix"] = ToString(found->matrix);
  rep["verified"] = VerifyWitness(g, found->matrix, r, r2, n, n2);
  return Emit(ctx, rep, true);
}

int CatalogList(const Context& ctx) {
  ojson rep;
  ojson list = ojson::array();
  for (const auto& e : LoadCatalog()) {
    std::string ids;
    for (const auto& c : ClassIds(e)) ids += (ids.empty() ? "" : " ") + c;
    list.push_back(e.id + "  " + e.name + "  [" + ids + "]");
  }
  rep["entries"] = list;
  return Emit(ctx, rep, true);
}

int CatalogShow(const Context& ctx, const std::string& key,
                const std::string& cls, int sample, uint64_t seed) {
  const CatalogEntry& e = NeedEntry(key);
  if (cls.empty()) {
    ctx.out << FormatJson(e.json) << "\n";
    return kPass;
  }
  std::vector<std::string> ids = ClassIds(e);
  if (std::find(ids.begin(), ids.end(), cls) == ids.end()) {
    throw UsageError("no class " + cls + " in " + e.id);
  }
  if (sample < 0) throw UsageError("--sample must be non-negative");
  Assignment a = SampleParameters(e, cls, seed, sample + 1).back();
  Document d;
  d.algebra = InstantiateAlgebra(e, a);
  if (cls == "aut") {
    d.automorphism = InstantiateAutomorphism(e, a);
  } else if (cls != "algebra") {
    d.r = InstantiateR(e, cls, a);
    if (cls == "rn" || cls[0] == 'n') d.n = InstantiateN(e, cls, a);
  }
  if (ctx.json) {
    ctx.out << PrintDocument(d);
  } else {
    ctx.out << "# " << e.id << " " << cls << " at " << FormatAssignment(a)
            << "\n" << PrintDocument(d);
  }
  return kPass;
}

int CatalogVerify(const Context& ctx, uint64_t seed, int samples) {
  if (samples < 1) throw UsageError("--samples must be at least 1");
  CatalogReport r = VerifyCatalog(seed, samples);
  ojson rep;
  ojson fails = ojson::array();
  for (const auto& f : r.failures) {
    fails.push_back(f.entry + " " + f.class_id + " " + f.check + " at " +
                    f.assignment);
  }
  rep["seed"] = seed;
  rep["samples"] = samples;
  rep["failures"] = fails;
  rep["summary"] = std::to_string(r.entries) + " entries, " +
                   std::to_string(r.failures.size()) + " failures";
  rep["checks"] = r.checks;
  return Emit(ctx, rep, r.failures.empty());
}

ojson PolyList(const std::vector<Polynomial>& ps, const std::string& name) {
  ojson a = ojson::array();
  for (size_t k = 0; k < ps.size(); ++k) {
    a.push_back(name + std::to_string(k + 1) + " = " + ps[k].ToString());
  }
  return a;
}

int InvariantsCmd(const Context& ctx, const std::string& file, int kmax,
                  int trials, uint64_t seed) {
  if (kmax < 1) throw UsageError("--kmax must be at least 1");
  Document d = Load(file);
  const LieAlgebra& g = NeedAlgebra(d, file);
  const Bivector& r = NeedR(d, file);
  if (!d.phase_space) throw UsageError(file + ": missing phase_space section");
  if (!d.realization) throw UsageError(file + ": missing realization section");
  if (!d.representation) throw UsageError(file + ": missing representation section");
  const PhaseSpace& p = *d.phase_space;
  const auto& s = *d.realization;
  const auto& t = *d.representation;
  if (static_cast<int>(s.size()) != g.dim() ||
      static_cast<int>(t.size()) != g.dim()) {
    throw UsageError(file + ": need one S and one T per basis element");
  }
  ojson rep;
  bool ok = true;
  RealizationReport real = CheckRealization(p, g, s);
  rep["realization"] = Status(real.ok());
  if (!real.ok()) {
    rep["realization_failures"] = PairList(real.failures);
    rep["sign_flip_fixes"] = real.sign_flip_fixes;
  }
  IndexPairs rbad = CheckRepresentation(g, t);
  rep["representation"] = Status(rbad.empty());
  if (!rbad.empty()) rep["representation_failures"] = PairList(rbad);
  bool cybe = CheckCybeMatrix(g, r);
  rep["cybe"] = Status(cybe);
  ok = real.ok() && rbad.empty() && cybe;

  std::vector<Polynomial> inv = Invariants(LaxMatrix(s, r, t), kmax);
  rep["invariants"] = PolyList(inv, "I");
  IndexPairs nonzero = CheckInvolution(p, inv);
  rep["involution"] = Status(nonzero.empty());
  if (!nonzero.empty()) rep["involution_failures"] = PairList(nonzero);
  Integrability cls = ClassifyIntegrability(p, inv, trials, seed);
  rep["independence_rank"] = cls.rank;
  rep["rank_stable"] = cls.stable;
  rep["classification"] = cls.ToString();

  if (!d.parts.empty()) {
    ojson parts = ojson::array();
    for (size_t l = 0; l < d.parts.size(); ++l) {
      std::vector<Polynomial> pi = Invariants(LaxMatrix(s, d.parts[l], t), kmax);
      ojson part;
      part["r"] = WedgeString(d.parts[l]);
      part["invariants"] = PolyList(pi, "I");
      part["classification"] = ClassifyIntegrability(p, pi, trials, seed).ToString();
      parts.push_back(part);
    }
    rep["parts"] = parts;
    try {
      SumHamiltonianResult sh = SumHamiltonian(g, s, t, r, d.parts);
      Bivector summed = Bivector::FromMatrix(sh.n_sum.m * r.m);
      rep["sum"]["n"] = EndoJson(sh.n_sum);
      rep["sum"]["H"] = sh.H.ToString();
      rep["sum"]["invariants"] = PolyList(Invariants(LaxMatrix(s, summed, t), kmax), "I");
      rep["sum"]["consistency"] = Status(sh.consistency);
      ok = ok && sh.consistency;
    } catch (const PreconditionError& e) {
      rep["sum"]["error"] = e.what();
      ok = false;
    }
  }
  return Emit(ctx, rep, ok);
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact r-matrix, Nijenhuis and r-n structure toolkit", "rnstruct"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit the report as a JSON document");

  std::string f1, f2, witness, family, key, cls;
  int k = 1, kmax = 3, samples = 5, sample = 0, trials = 5;
  long budget = 10000;
  uint64_t seed = 1;
  bool search = false;

  auto* va = app.add_subcommand("verify-algebra", "Check the Jacobi identity");
  va->add_option("FILE", f1)->required();
  auto* vr = app.add_subcommand("verify-r", "Check the classical Yang-Baxter equation");
  vr->add_option("FILE", f1)->required();
  auto* vn = app.add_subcommand("verify-n", "Check that n is Nijenhuis");
  vn->add_option("FILE", f1)->required();
  auto* vrn = app.add_subcommand("verify-rn", "Check the four r-n conditions");
  vrn->add_option("FILE", f1)->required();
  auto* du = app.add_subcommand("dual", "Print the Sklyanin dual bracket");
  du->add_option("FILE", f1)->required();
  auto* hi = app.add_subcommand("hierarchy", "Build r_k = n^k r and check it");
  hi->add_option("FILE", f1)->required();
  hi->add_option("--k", k, "Highest level")->capture_default_str();
  auto* co = app.add_subcommand("compat", "Compatibility of two r, n or (r, n)");
  co->add_option("FILE1", f1)->required();
  co->add_option("FILE2", f2)->required();
  auto* cn = app.add_subcommand("construct-n", "n = r2 r^-1 from compatible r-matrices");
  cn->add_option("FILE_R", f1)->required();
  cn->add_option("FILE_R2", f2)->required();
  auto* eq = app.add_subcommand("equiv", "Equivalence under automorphisms");
  eq->add_option("FILE1", f1)->required();
  eq->add_option("FILE2", f2)->required();
  auto* wopt = eq->add_option("--witness", witness, "Document with an automorphism");
  auto* sopt = eq->add_flag("--search", search, "Search the automorphism family");
  wopt->excludes(sopt);
  eq->add_option("--budget", budget, "Search trials")->capture_default_str();
  eq->add_option("--seed", seed)->capture_default_str();
  eq->add_option("--family", family, "Catalog entry whose family to search");
  auto* cat = app.add_subcommand("catalog", "The embedded classification data");
  cat->require_subcommand(1);
  auto* cl = cat->add_subcommand("list", "List entries and classes");
  auto* cs = cat->add_subcommand("show", "Print an entry or an instantiated class");
  cs->add_option("ENTRY", key)->required();
  cs->add_option("--class", cls, "Class id (r1, rn, n1, aut, ...)");
  cs->add_option("--sample", sample, "Sample index; 0 uses the defaults");
  cs->add_option("--seed", seed)->capture_default_str();
  auto* cv = cat->add_subcommand("verify", "Sample and verify every class");
  cv->add_option("--seed", seed)->capture_default_str();
  cv->add_option("--samples", samples)->capture_default_str();
  auto* iv = app.add_subcommand("invariants", "Realization, Lax matrix and invariants");
  iv->add_option("FILE", f1)->required();
  iv->add_option("--kmax", kmax)->capture_default_str();
  iv->add_option("--trials", trials, "Independence sampling points per round")
      ->capture_default_str();
  iv->add_option("--seed", seed)->capture_default_str();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "rnstruct: " << e.what() << "\n";
    return kUsage;
  }

  Context ctx{json, out};
  try {
    if (*va) return VerifyAlgebra(ctx, f1);
    if (*vr) return VerifyR(ctx, f1);
    if (*vn) return VerifyN(ctx, f1);
    if (*vrn) return VerifyRN(ctx, f1);
    if (*du) return Dual(ctx, f1);
    if (*hi) return HierarchyCmd(ctx, f1, k);
    if (*co) return Compat(ctx, f1, f2);
    if (*cn) return ConstructN(ctx, f1, f2);
    if (*eq) return Equiv(ctx, f1, f2, witness, search, budget, seed, family);
    if (*cl) return CatalogList(ctx);
    if (*cs) return CatalogShow(ctx, key, cls, sample, seed);
    if (*cv) return CatalogVerify(ctx, seed, samples);
    if (*iv) return InvariantsCmd(ctx, f1, kmax, trials, seed);
  } catch (const UsageError& e) {
    err << "rnstruct: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "rnstruct: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "rnstruct: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "rnstruct: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}

}  // namespace rnstruct::cli
