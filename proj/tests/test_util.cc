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

#include "test_util.h"

namespace rnstruct::testing {

Rational RandomRational(std::mt19937_64& rng, long height) {
  Rational x(std::uniform_int_distribution<long>(-height, height)(rng),
             std::uniform_int_distribution<long>(1, height)(rng));
  x.canonicalize();
  return x;
}

RMatrix RandomMatrix(std::mt19937_64& rng, int rows, int cols, long height) {
  RMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = RandomRational(rng, height);
  }
  return m;
}

Bivector RandomBivector(std::mt19937_64& rng, int dim, long height) {
  RMatrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) {
      m(i, j) = RandomRational(rng, height);
      m(j, i) = -m(i, j);
    }
  }
  return Bivector::FromMatrix(m);
}

Endomorphism RandomEndomorphism(std::mt19937_64& rng, int dim, long height) {
  return {RandomMatrix(rng, dim, dim, height)};
}

Polynomial RandomPolynomial(std::mt19937_64& rng,
                            const std::vector<std::string>& vars, int terms,
                            int max_exp) {
  Polynomial p = Polynomial::Constant(vars, 0);
  std::uniform_int_distribution<int> e(0, max_exp);
  for (int t = 0; t < terms; ++t) {
    Polynomial m = Polynomial::Constant(vars, RandomRational(rng));
    for (const auto& v : vars) m *= Polynomial::Variable(vars, v).Pow(e(rng));
    p += m;
  }
  return p;
}

LieAlgebra A41() {
  return LieAlgebra::FromBrackets(4, {{2, 4, 1, 1}, {3, 4, 2, 1}}, "A_{4,1}");
}

Bivector WedgeR(int dim, const std::vector<WedgeTerm>& terms) {
  return Bivector::FromWedge(dim, terms);
}

namespace oracle {
namespace {

Vector Zero(int d) { return Vector(d); }

Vector Add(Vector a, const Vector& b, const Rational& s = 1) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

Rational Pair(const Vector& alpha, const Vector& x) {
  Rational s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += alpha[i] * x[i];
  return s;
}

Vector ApplyN(const Endomorphism& n, const Vector& x) {
  int d = n.dim();
  Vector y = Zero(d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) y[i] += n.m(i, j) * x[j];
  }
  return y;
}

// (n^t alpha)(Y) = alpha(nY).
Vector ApplyNt(const Endomorphism& n, const Vector& alpha) {
  int d = n.dim();
  Vector y = Zero(d);
  for (int j = 0; j < d; ++j) {
    y[j] = Pair(alpha, ApplyN(n, BasisVector(d, j)));
  }
  return y;
}

bool IsZeroVec(const Vector& v) {
  for (const auto& x : v) {
    if (!IsZero(x)) return false;
  }
  return true;
}

}  // namespace

Vector Bracket(const LieAlgebra& g, const Vector& x, const Vector& y) {
  int d = g.dim();
  Vector z = Zero(d);
  for (int i = 0; i < d; ++i) {
    if (IsZero(x[i])) continue;
    for (int j = 0; j < d; ++j) {
      if (IsZero(y[j])) continue;
      for (int k = 0; k < d; ++k) z[k] += x[i] * y[j] * g.f(k, i, j);
    }
  }
  return z;
}

bool JacobiHolds(const LieAlgebra& g) {
  int d = g.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        Vector x = BasisVector(d, i), y = BasisVector(d, j), z = BasisVector(d, k);
        Vector s = Add(Add(Bracket(g, Bracket(g, x, y), z),
                           Bracket(g, Bracket(g, y, z), x)),
                       Bracket(g, Bracket(g, z, x), y));
        if (!IsZeroVec(s)) return false;
      }
    }
  }
  return true;
}

Vector Sharp(const Bivector& r, const Vector& alpha) {
  // r = sum_{i<j} m(i,j) X_i ^ X_j, r(a, b) = sum_{i,j} m(i,j) a_i b_j.
  int d = r.dim();
  Vector x = Zero(d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) x[j] += alpha[i] * r.m(i, j);
  }
  return x;
}

Vector Coad(const LieAlgebra& g, const Vector& x, const Vector& alpha) {
  int d = g.dim();
  Vector out = Zero(d);
  for (int j = 0; j < d; ++j) {
    out[j] = -Pair(alpha, Bracket(g, x, BasisVector(d, j)));
  }
  return out;
}

Vector DualBracket(const LieAlgebra& g, const Bivector& r, const Vector& a,
                   const Vector& b) {
  return Add(Coad(g, Sharp(r, a), b), Coad(g, Sharp(r, b), a), -1);
}

bool CybeHolds(const LieAlgebra& g, const Bivector& r) {
  int d = g.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Vector a = BasisVector(d, i), b = BasisVector(d, j);
      Vector lhs = Bracket(g, Sharp(r, a), Sharp(r, b));
      Vector rhs = Sharp(r, DualBracket(g, r, a, b));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool NijenhuisHolds(const LieAlgebra& g, const Endomorphism& n) {
  int d = g.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Vector x = BasisVector(d, i), y = BasisVector(d, j);
      Vector nx = ApplyN(n, x), ny = ApplyN(n, y);
      Vector t = Bracket(g, nx, ny);
      t = Add(t, ApplyN(n, Bracket(g, nx, y)), -1);
      t = Add(t, ApplyN(n, Bracket(g, x, ny)), -1);
      t = Add(t, ApplyN(n, ApplyN(n, Bracket(g, x, y))));
      if (!IsZeroVec(t)) return false;
    }
  }
  return true;
}

bool ConcomitantHolds(const LieAlgebra& g, const Bivector& r,
                      const Endomorphism& n) {
  int d = g.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Vector a = BasisVector(d, i), b = BasisVector(d, j);
      Vector ra = Sharp(r, a), rb = Sharp(r, b);
      Vector c = Coad(g, ra, ApplyNt(n, b));
      c = Add(c, Coad(g, rb, ApplyNt(n, a)), -1);
      c = Add(c, ApplyNt(n, Coad(g, ra, b)), -1);
      c = Add(c, ApplyNt(n, Coad(g, rb, a)));
      if (!IsZeroVec(c)) return false;
    }
  }
  return true;
}

bool AutomorphismHolds(const LieAlgebra& g, const RMatrix& a) {
  if (Rank(a) != a.rows()) return false;
  int d = g.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      Vector x = BasisVector(d, i), y = BasisVector(d, j);
      if (a.Apply(Bracket(g, x, y)) != Bracket(g, a.Apply(x), a.Apply(y))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace oracle
}  // namespace rnstruct::testing
