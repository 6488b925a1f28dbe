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

#include "rnstruct/pn.h"

#include <string>
#include <utility>

namespace rnstruct {
namespace {

void RequireDim(const LieAlgebra& g, int d) {
  if (d != g.dim()) throw std::invalid_argument("dimension mismatch");
}

Vector Sharp(const Bivector& r, int i) { return r.m.Row(i); }

// Sum over l of coef(l) * M_l.
RMatrix Combination(const std::vector<RMatrix>& ms, const Vector& coef) {
  int d = ms.empty() ? 0 : ms[0].rows();
  RMatrix acc(d, d);
  for (size_t l = 0; l < ms.size(); ++l) {
    if (!IsZero(coef[l])) acc += ms[l] * coef[l];
  }
  return acc;
}

}  // namespace

Bivector Bivector::FromWedge(int dim, const std::vector<WedgeTerm>& terms) {
  Bivector b;
  b.m = RMatrix(dim, dim);
  for (const auto& t : terms) {
    if (t.i < 1 || t.j > dim || t.i >= t.j) {
      throw std::invalid_argument("wedge term needs 1 <= i < j <= dim");
    }
    b.m(t.i - 1, t.j - 1) += t.c;
    b.m(t.j - 1, t.i - 1) -= t.c;
  }
  return b;
}

Bivector Bivector::FromMatrix(RMatrix m) {
  if (!m.square()) throw std::invalid_argument("bivector matrix not square");
  if (m.Transpose() != -m) {
    throw std::invalid_argument("bivector matrix not antisymmetric");
  }
  Bivector b;
  b.m = std::move(m);
  return b;
}

std::vector<WedgeTerm> Bivector::Wedge() const {
  std::vector<WedgeTerm> out;
  for (int i = 0; i < dim(); ++i) {
    for (int j = i + 1; j < dim(); ++j) {
      if (!IsZero(m(i, j))) out.push_back({i + 1, j + 1, m(i, j)});
    }
  }
  return out;
}

bool Tensor3::IsZero() const {
  for (const auto& x : v_) {
    if (!rnstruct::IsZero(x)) return false;
  }
  return true;
}

std::vector<std::array<int, 3>> Tensor3::NonzeroIndices() const {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < dim_; ++a) {
    for (int b = 0; b < dim_; ++b) {
      for (int c = 0; c < dim_; ++c) {
        if (!rnstruct::IsZero(at(a, b, c))) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::vector<int> CybeMatrixFailures(const LieAlgebra& g, const Bivector& r) {
  RequireDim(g, r.dim());
  int d = g.dim();
  AdjointData ad = AdjointMatrices(g);
  std::vector<RMatrix> sym;
  for (int l = 0; l < d; ++l) sym.push_back(r.m * ad.X[l] + ad.X[l].Transpose() * r.m);
  std::vector<int> bad;
  for (int i = 0; i < d; ++i) {
    RMatrix e = r.m * ad.Y[i] * r.m - Combination(sym, r.m.Row(i));
    if (!e.IsZero()) bad.push_back(i);
  }
  return bad;
}

bool CheckCybeMatrix(const LieAlgebra& g, const Bivector& r) {
  return CybeMatrixFailures(g, r).empty();
}

Tensor3 SklyaninDual(const LieAlgebra& g, const Bivector& r) {
  RequireDim(g, r.dim());
  int d = g.dim();
  Tensor3 t(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int m = 0; m < d; ++m) {
        Rational s = 0;
        for (int l = 0; l < d; ++l) {
          s += r.m(j, l) * g.f(i, l, m) - r.m(i, l) * g.f(j, l, m);
        }
        t.at(i, j, m) = s;
      }
    }
  }
  return t;
}

LieAlgebra DualAlgebra(const LieAlgebra& g, const Bivector& r) {
  Tensor3 t = SklyaninDual(g, r);
  int d = g.dim();
  std::vector<Rational> f(d * d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int m = 0; m < d; ++m) f[(m * d + i) * d + j] = t.at(i, j, m);
    }
  }
  return LieAlgebra::FromConstants(d, std::move(f), g.name() + "*");
}

Tensor3 SchoutenDefect(const LieAlgebra& g, const Bivector& r) {
  Tensor3 dual = SklyaninDual(g, r);
  int d = g.dim();
  Tensor3 t(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Vector br = g.Bracket(Sharp(r, i), Sharp(r, j));
      for (int k = 0; k < d; ++k) {
        Rational s = br[k];
        for (int m = 0; m < d; ++m) s -= dual.at(i, j, m) * r.m(m, k);
        t.at(i, j, k) = s;
      }
    }
  }
  return t;
}

Tensor3 MixedSchoutenDefect(const LieAlgebra& g, const Bivector& r,
                            const Bivector& r2) {
  RequireDim(g, r2.dim());
  Tensor3 d1 = SklyaninDual(g, r);
  Tensor3 d2 = SklyaninDual(g, r2);
  int d = g.dim();
  Tensor3 t(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Vector b1 = g.Bracket(Sharp(r, i), Sharp(r2, j));
      Vector b2 = g.Bracket(Sharp(r2, i), Sharp(r, j));
      for (int k = 0; k < d; ++k) {
        Rational s = -b1[k] - b2[k];
        for (int m = 0; m < d; ++m) {
          s += d2.at(i, j, m) * r.m(m, k) + d1.at(i, j, m) * r2.m(m, k);
        }
        t.at(i, j, k) = s;
      }
    }
  }
  return t;
}

bool CheckRCompatible(const LieAlgebra& g, const Bivector& r,
                      const Bivector& r2) {
  if (!CheckCybeMatrix(g, r) || !CheckCybeMatrix(g, r2)) {
    throw PreconditionError("compatibility needs two CYBE solutions");
  }
  Bivector sum{r.m + r2.m};
  bool by_sum = CheckCybeMatrix(g, sum);
  bool by_mixed = MixedSchoutenDefect(g, r, r2).IsZero();
  if (by_sum != by_mixed) {
    throw InternalError("sum test and mixed identity disagree");
  }
  return by_sum;
}

Bivector InverseR(const Bivector& r) {
  Bivector inv{Inverse(r.m), !r.on_dual};
  return inv;
}

bool CheckBiRMatrix(const LieAlgebra& g, const Bivector& r) {
  if (!CheckCybeMatrix(g, r)) {
    throw PreconditionError("bi-r-matrix check needs a CYBE solution");
  }
  if (IsZero(Determinant(r.m))) {
    throw PreconditionError("bi-r-matrix check needs an invertible r");
  }
  LieAlgebra dual = DualAlgebra(g, r);
  Bivector inv = InverseR(r);
  Tensor3 back = SklyaninDual(dual, inv);
  int d = g.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int m = 0; m < d; ++m) {
        if (back.at(i, j, m) != g.f(m, i, j)) return false;
      }
    }
  }
  return true;
}

Tensor3 NijenhuisTorsion(const LieAlgebra& g, const Endomorphism& n) {
  RequireDim(g, n.dim());
  int d = g.dim();
  RMatrix n2 = n.m * n.m;
  Tensor3 t(d);
  for (int a = 0; a < d; ++a) {
    Vector ea = BasisVector(d, a), na = n.m.Column(a);
    for (int b = 0; b < d; ++b) {
      Vector eb = BasisVector(d, b), nb = n.m.Column(b);
      Vector v = g.Bracket(na, nb);
      Vector x = n.m.Apply(g.Bracket(na, eb));
      Vector y = n.m.Apply(g.Bracket(ea, nb));
      Vector z = n2.Apply(g.Bracket(ea, eb));
      for (int k = 0; k < d; ++k) t.at(a, b, k) = v[k] - x[k] - y[k] + z[k];
    }
  }
  return t;
}

std::vector<int> NijenhuisMatrixFailures(const LieAlgebra& g,
                                         const Endomorphism& n) {
  RequireDim(g, n.dim());
  int d = g.dim();
  AdjointData ad = AdjointMatrices(g);
  RMatrix nt = n.m.Transpose();
  std::vector<RMatrix> left, right;
  for (int l = 0; l < d; ++l) {
    left.push_back(nt * ad.X[l]);
    right.push_back(ad.X[l] * nt);
  }
  std::vector<int> bad;
  for (int i = 0; i < d; ++i) {
    Vector col = n.m.Column(i);
    RMatrix e = ad.X[i] * nt * nt + Combination(left, col) -
                nt * ad.X[i] * nt - Combination(right, col);
    if (!e.IsZero()) bad.push_back(i);
  }
  return bad;
}

bool CheckNijenhuisMatrix(const LieAlgebra& g, const Endomorphism& n) {
  return NijenhuisMatrixFailures(g, n).empty();
}

Tensor3 Concomitant(const LieAlgebra& g, const Bivector& r,
                    const Endomorphism& n) {
  RequireDim(g, r.dim());
  RequireDim(g, n.dim());
  int d = g.dim();
  RMatrix nt = n.m.Transpose();
  std::vector<RMatrix> coad;
  for (int a = 0; a < d; ++a) coad.push_back(CoadjointMatrix(g, Sharp(r, a)));
  Tensor3 t(d);
  for (int a = 0; a < d; ++a) {
    Vector ea = BasisVector(d, a), nta = nt.Column(a);
    for (int b = 0; b < d; ++b) {
      Vector eb = BasisVector(d, b), ntb = nt.Column(b);
      Vector p = coad[a].Apply(ntb);
      Vector q = coad[b].Apply(nta);
      Vector s = nt.Apply(coad[a].Apply(eb));
      Vector u = nt.Apply(coad[b].Apply(ea));
      for (int k = 0; k < d; ++k) t.at(a, b, k) = p[k] - q[k] - s[k] + u[k];
    }
  }
  return t;
}

std::vector<int> ConcomitantMatrixFailures(const LieAlgebra& g,
                                           const Bivector& r,
                                           const Endomorphism& n) {
  RequireDim(g, r.dim());
  RequireDim(g, n.dim());
  int d = g.dim();
  AdjointData ad = AdjointMatrices(g);
  RMatrix nt = n.m.Transpose();
  std::vector<RMatrix> sym;
  for (int j = 0; j < d; ++j) sym.push_back(r.m * ad.X[j] + ad.X[j].Transpose() * r.m);
  std::vector<int> bad;
  for (int i = 0; i < d; ++i) {
    RMatrix e = Combination(sym, n.m.Column(i)) - r.m * ad.X[i] * nt -
                n.m * ad.X[i].Transpose() * r.m;
    if (!e.IsZero()) bad.push_back(i);
  }
  return bad;
}

bool CheckConcomitantMatrix(const LieAlgebra& g, const Bivector& r,
                            const Endomorphism& n) {
  return ConcomitantMatrixFailures(g, r, n).empty();
}

bool CheckCon1(const Bivector& r, const Endomorphism& n) {
  if (r.dim() != n.dim()) throw std::invalid_argument("dimension mismatch");
  return n.m * r.m == r.m * n.m.Transpose();
}

RNReport CheckRN(const LieAlgebra& g, const Bivector& r, const Endomorphism& n) {
  RNReport rep;
  rep.cybe = CheckCybeMatrix(g, r);
  rep.torsion = CheckNijenhuisMatrix(g, n);
  rep.con1 = CheckCon1(r, n);
  rep.concomitant = CheckConcomitantMatrix(g, r, n);
  if (rep.cybe != SchoutenDefect(g, r).IsZero()) {
    throw InternalError("CYBE matrix form disagrees with the Schouten defect");
  }
  if (rep.torsion != NijenhuisTorsion(g, n).IsZero()) {
    throw InternalError("Nijenhuis matrix form disagrees with the torsion");
  }
  if (rep.concomitant != Concomitant(g, r, n).IsZero()) {
    throw InternalError("concomitant matrix form disagrees with the tensor");
  }
  return rep;
}

std::vector<Bivector> Hierarchy(const LieAlgebra& g, const Bivector& r,
                                const Endomorphism& n, int K) {
  if (K < 1) throw std::invalid_argument("hierarchy depth must be >= 1");
  if (!CheckRN(g, r, n).ok()) {
    throw PreconditionError("hierarchy needs an r-n structure");
  }
  std::vector<Bivector> out;
  RMatrix cur = r.m;
  for (int k = 1; k <= K; ++k) {
    cur = n.m * cur;
    out.push_back(Bivector::FromMatrix(cur));
  }
  return out;
}

Endomorphism NFromPair(const LieAlgebra& g, const Bivector& r,
                       const Bivector& r2) {
  if (IsZero(Determinant(r.m))) throw SingularMatrixError();
  if (!CheckRCompatible(g, r, r2)) {
    throw PreconditionError("r-matrices are not compatible");
  }
  Endomorphism n{r2.m * Inverse(r.m)};
  if (!CheckRN(g, r, n).ok() || n.m * r.m != r2.m) {
    throw InternalError("r2 r^-1 is not an r-n partner of r");
  }
  return n;
}

Tensor3 NijenhuisConcomitant(const LieAlgebra& g, const Endomorphism& n1,
                             const Endomorphism& n2) {
  if (!CheckNijenhuisMatrix(g, n1) || !CheckNijenhuisMatrix(g, n2)) {
    throw PreconditionError("Nijenhuis concomitant needs two Nijenhuis operators");
  }
  int d = g.dim();
  RMatrix p12 = n1.m * n2.m, p21 = n2.m * n1.m;
  Tensor3 t(d);
  for (int i = 0; i < d; ++i) {
    Vector ei = BasisVector(d, i);
    Vector a1 = n1.m.Column(i), a2 = n2.m.Column(i);
    for (int j = 0; j < d; ++j) {
      Vector ej = BasisVector(d, j);
      Vector b1 = n1.m.Column(j), b2 = n2.m.Column(j);
      Vector eij = g.Bracket(ei, ej);
      Vector s1 = g.Bracket(a1, b2);
      Vector s2 = n1.m.Apply(g.Bracket(a2, ej));
      Vector s3 = n1.m.Apply(g.Bracket(ei, b2));
      Vector s4 = p12.Apply(eij);
      Vector s5 = g.Bracket(a2, b1);
      Vector s6 = n2.m.Apply(g.Bracket(a1, ej));
      Vector s7 = n2.m.Apply(g.Bracket(ei, b1));
      Vector s8 = p21.Apply(eij);
      for (int k = 0; k < d; ++k) {
        t.at(i, j, k) = s1[k] - s2[k] - s3[k] + s4[k] + s5[k] - s6[k] - s7[k] + s8[k];
      }
    }
  }
  return t;
}

bool CheckNCompatible(const LieAlgebra& g, const Endomorphism& n1,
                      const Endomorphism& n2) {
  bool zero = NijenhuisConcomitant(g, n1, n2).IsZero();
  if (zero && !CheckNijenhuisMatrix(g, Endomorphism{n1.m + n2.m})) {
    throw InternalError("vanishing concomitant but n1 + n2 not Nijenhuis");
  }
  return zero;
}

bool CheckRNCompatible(const LieAlgebra& g, const Bivector& r1,
                       const Endomorphism& n1, const Bivector& r2,
                       const Endomorphism& n2) {
  if (r1.dim() != r2.dim() || n1.dim() != n2.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  if (!CheckRN(g, r1, n1).ok() || !CheckRN(g, r2, n2).ok()) {
    throw PreconditionError("compatibility needs two r-n structures");
  }
  return CheckRN(g, Bivector{r1.m + r2.m}, Endomorphism{n1.m + n2.m}).ok();
}

}  // namespace rnstruct
