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

#include "rnstruct/integrable.h"

#include <random>
#include <stdexcept>

#include "rnstruct/parser.h"

namespace rnstruct {

PhaseSpace PhaseSpace::Canonical(int n) {
  RMatrix pi(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    pi(i, i + n) = 1;
    pi(i + n, i) = -1;
  }
  return FromMatrix(std::move(pi));
}

PhaseSpace PhaseSpace::FromMatrix(RMatrix pi) {
  if (!pi.square() || pi.rows() % 2 != 0 || pi.rows() == 0) {
    throw std::invalid_argument("Poisson matrix must be square of even size");
  }
  if (pi + pi.Transpose() != RMatrix(pi.rows(), pi.cols())) {
    throw std::invalid_argument("Poisson matrix is not antisymmetric");
  }
  if (Rank(pi) != pi.rows()) {
    throw std::invalid_argument("Poisson matrix is degenerate");
  }
  PhaseSpace p;
  for (int i = 0; i < pi.rows(); ++i) {
    p.vars.push_back("x" + std::to_string(i + 1));
  }
  p.pi = std::move(pi);
  return p;
}

Polynomial PhaseSpace::Variable(int i) const {
  return Polynomial::Variable(vars, vars.at(i));
}

Polynomial PhaseSpace::Parse(const std::string& expr) const {
  return ParsePolynomial(expr, vars);
}

Polynomial PoissonBracket(const PhaseSpace& p, const Polynomial& f,
                          const Polynomial& g) {
  Polynomial a, b;
  try {
    a = f.Aligned(p.vars);
    b = g.Aligned(p.vars);
  } catch (const std::exception&) {
    throw std::invalid_argument("polynomial uses a variable outside the phase space");
  }
  Polynomial out = Polynomial::Constant(p.vars, 0);
  std::vector<Polynomial> da, db;
  for (const auto& v : p.vars) {
    da.push_back(a.Partial(v));
    db.push_back(b.Partial(v));
  }
  for (int i = 0; i < p.dim(); ++i) {
    if (da[i].IsZero()) continue;
    for (int j = 0; j < p.dim(); ++j) {
      if (IsZero(p.pi(i, j))) continue;
      out += da[i] * db[j] * Polynomial(p.pi(i, j));
    }
  }
  return out;
}

namespace {

Polynomial Combination(const LieAlgebra& g, int i, int j,
                       const std::vector<Polynomial>& s,
                       const std::vector<std::string>& vars) {
  Polynomial sum = Polynomial::Constant(vars, 0);
  for (int k = 0; k < g.dim(); ++k) {
    if (!IsZero(g.f(k, i, j))) sum += Polynomial(g.f(k, i, j)) * s[k];
  }
  return sum;
}

}  // namespace

RealizationReport CheckRealization(const PhaseSpace& p, const LieAlgebra& g,
                                   const std::vector<Polynomial>& s) {
  if (static_cast<int>(s.size()) != g.dim()) {
    throw std::invalid_argument("need one function per basis element");
  }
  std::vector<Polynomial> a;
  for (const auto& x : s) a.push_back(x.Aligned(p.vars));
  RealizationReport rep;
  bool flipped = true;
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = i + 1; j < g.dim(); ++j) {
      Polynomial lhs = PoissonBracket(p, a[i], a[j]);
      Polynomial rhs = Combination(g, i, j, a, p.vars);
      if (lhs != rhs) rep.failures.push_back({i, j});
      if (lhs != -rhs) flipped = false;
    }
  }
  rep.sign_flip_fixes = !rep.ok() && flipped;
  return rep;
}

IndexPairs CheckRepresentation(const LieAlgebra& g,
                               const std::vector<RMatrix>& t) {
  if (static_cast<int>(t.size()) != g.dim()) {
    throw std::invalid_argument("need one matrix per basis element");
  }
  int m = t.empty() ? 0 : t[0].rows();
  for (const auto& x : t) {
    if (x.rows() != m || x.cols() != m) {
      throw std::invalid_argument("representation matrices differ in shape");
    }
  }
  IndexPairs bad;
  for (int i = 0; i < g.dim(); ++i) {
    for (int j = i + 1; j < g.dim(); ++j) {
      RMatrix rhs(m, m);
      for (int k = 0; k < g.dim(); ++k) rhs += t[k] * g.f(k, i, j);
      if (t[i] * t[j] - t[j] * t[i] != rhs) bad.push_back({i, j});
    }
  }
  return bad;
}

PMatrix LaxMatrix(const std::vector<Polynomial>& s, const Bivector& r,
                  const std::vector<RMatrix>& t) {
  int d = r.dim();
  if (static_cast<int>(s.size()) != d || static_cast<int>(t.size()) != d) {
    throw std::invalid_argument("dimension mismatch");
  }
  std::vector<std::string> vars;
  for (const auto& x : s) vars = MergeVariables(vars, x.variables());
  int m = d == 0 ? 0 : t[0].rows();
  PMatrix q(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) q(a, b) = Polynomial::Constant(vars, 0);
  }
  for (int i = 0; i < d; ++i) {
    Polynomial si = s[i].Aligned(vars);
    for (int j = 0; j < d; ++j) {
      if (IsZero(r.m(i, j))) continue;
      if (t[j].rows() != m || t[j].cols() != m) {
        throw std::invalid_argument("representation matrices differ in shape");
      }
      for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
          Rational c = r.m(i, j) * t[j](a, b);
          if (!IsZero(c)) q(a, b) += si * Polynomial(c);
        }
      }
    }
  }
  return q;
}

std::vector<Polynomial> Invariants(const PMatrix& q, int K) {
  if (K < 1) throw std::invalid_argument("need K >= 1");
  std::vector<Polynomial> out;
  PMatrix power = q;
  for (int k = 1; k <= K; ++k) {
    if (k > 1) power = power * q;
    Polynomial tr = 0;
    for (int i = 0; i < q.rows(); ++i) tr += power(i, i);
    out.push_back(tr);
  }
  return out;
}

IndexPairs CheckInvolution(const PhaseSpace& p,
                           const std::vector<Polynomial>& polys) {
  IndexPairs bad;
  for (size_t i = 0; i < polys.size(); ++i) {
    for (size_t j = i + 1; j < polys.size(); ++j) {
      if (!PoissonBracket(p, polys[i], polys[j]).IsZero()) {
        bad.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  return bad;
}

IndependenceReport IndependenceRank(const PhaseSpace& p,
                                    const std::vector<Polynomial>& polys,
                                    int trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need trials >= 1");
  int rows = static_cast<int>(polys.size());
  std::vector<std::vector<Polynomial>> jac(rows);
  for (int a = 0; a < rows; ++a) {
    Polynomial f = polys[a].Aligned(p.vars);
    for (const auto& v : p.vars) jac[a].push_back(f.Partial(v));
  }
  int cap = std::min(rows, p.dim());
  std::mt19937_64 rng(seed);
  IndependenceReport rep;
  int previous = -1;
  long height = 100;
  for (int round = 0; round < 6; ++round, height *= 2) {
    int best = 0;
    std::uniform_int_distribution<long> num(-height, height), den(1, height);
    for (int t = 0; t < trials; ++t) {
      Assignment pt;
      for (const auto& v : p.vars) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        pt[v] = x;
      }
      RMatrix m(rows, p.dim());
      for (int a = 0; a < rows; ++a) {
        for (int i = 0; i < p.dim(); ++i) m(a, i) = jac[a][i].Evaluate(pt);
      }
      best = std::max(best, Rank(m));
    }
    rep.rank = std::max(rep.rank, best);
    if (best == previous || rep.rank == cap) {
      rep.stable = true;
      break;
    }
    previous = best;
  }
  return rep;
}

std::string Integrability::ToString() const {
  switch (kind) {
    case Kind::kLiouville:
      return "Liouville-integrable";
    case Kind::kSuperintegrable:
      return "superintegrable(extra=" + std::to_string(extra) + ")";
    case Kind::kUnderDetermined:
      break;
  }
  return "under-determined";
}

namespace {

// Calls f on each k-subset of {0..n-1} until it returns true.
template <typename F>
bool ForEachSubset(int n, int k, F f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  while (true) {
    if (f(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Integrability ClassifyIntegrability(const PhaseSpace& p,
                                    const std::vector<Polynomial>& polys,
                                    int trials, uint64_t seed) {
  int n = p.dim() / 2;
  IndependenceReport ir = IndependenceRank(p, polys, trials, seed);
  Integrability out;
  out.rank = ir.rank;
  out.stable = ir.stable;
  out.maximal = ir.rank == p.dim() - 1;
  if (ir.rank > n) {
    out.kind = Integrability::Kind::kSuperintegrable;
    out.extra = ir.rank - n;
  }
  if (ir.rank < n) return out;
  ForEachSubset(static_cast<int>(polys.size()), n,
                [&](const std::vector<int>& idx) {
                  std::vector<Polynomial> sub;
                  for (int i : idx) sub.push_back(polys[i]);
                  if (!CheckInvolution(p, sub).empty()) return false;
                  if (IndependenceRank(p, sub, trials, seed).rank != n) {
                    return false;
                  }
                  out.involutive = idx;
                  return true;
                });
  if (out.kind == Integrability::Kind::kUnderDetermined &&
      !out.involutive.empty()) {
    out.kind = Integrability::Kind::kLiouville;
  }
  return out;
}

SumHamiltonianResult SumHamiltonian(const LieAlgebra& g,
                                    const std::vector<Polynomial>& s,
                                    const std::vector<RMatrix>& t,
                                    const Bivector& r,
                                    const std::vector<Bivector>& parts) {
  if (!CheckCybeMatrix(g, r)) throw PreconditionError("base r is not an r-matrix");
  SumHamiltonianResult res;
  res.n_sum.m = RMatrix(g.dim(), g.dim());
  Polynomial parts_total = 0;
  for (const auto& part : parts) {
    if (!CheckCybeMatrix(g, part) || !CheckRCompatible(g, r, part)) {
      throw PreconditionError("part is not an r-matrix compatible with r");
    }
    res.n_sum.m += NFromPair(g, r, part).m;
    Polynomial h = Invariants(LaxMatrix(s, part, t), 1)[0];
    res.part_H.push_back(h);
    parts_total += h;
  }
  Bivector summed = Bivector::FromMatrix(res.n_sum.m * r.m);
  res.H = Invariants(LaxMatrix(s, summed, t), 1)[0];
  res.consistency = res.H == parts_total && CheckRN(g, r, res.n_sum).ok();
  return res;
}

const IntegrableExample& A41Example() {
  static const IntegrableExample ex = [] {
    IntegrableExample e;
    e.g = LieAlgebra::FromBrackets(4, {{2, 4, 1, 1}, {3, 4, 2, 1}}, "A_{4,1}");
    e.phase = PhaseSpace::Canonical(2);
    for (const char* s : {"-x3", "-x2*x3", "-1/2*x2^2*x3", "x4"}) {
      e.S.push_back(e.phase.Parse(s));
    }
    e.T = {
        RMatrix{{0, 1, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}},
        RMatrix{{0, 1, 0, 2}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}},
        RMatrix{{1, 1, 0, 0}, {0, 1, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}},
        RMatrix{{0, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}},
    };
    e.r = Bivector::FromWedge(4, {{1, 4, 1}, {2, 3, -1}});
    e.parts = {
        Bivector::FromWedge(4, {{1, 2, 1}}),
        Bivector::FromWedge(4, {{1, 3, -1}}),
        Bivector::FromWedge(4, {{1, 4, 1}, {1, 3, -1}}),
        Bivector::FromWedge(4, {{2, 3, -1}}),
    };
    return e;
  }();
  return ex;
}

}  // namespace rnstruct
