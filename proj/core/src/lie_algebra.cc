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

#include "rnstruct/lie_algebra.h"

#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace rnstruct {

LieAlgebra LieAlgebra::FromBrackets(int dim,
                                    const std::vector<rnstruct::Bracket>& brackets,
                                    std::string name) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  LieAlgebra g;
  g.dim_ = dim;
  g.name_ = std::move(name);
  g.f_.assign(dim * dim * dim, Rational(0));
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& b : brackets) {
    if (b.i < 1 || b.i > dim || b.j < 1 || b.j > dim || b.k < 1 || b.k > dim) {
      throw std::invalid_argument("bracket index out of range");
    }
    if (b.i >= b.j) throw std::invalid_argument("bracket needs i < j");
    if (!seen.emplace(b.i, b.j, b.k).second) {
      throw std::invalid_argument("duplicate bracket entry");
    }
    int i = b.i - 1, j = b.j - 1, k = b.k - 1;
    g.f_[(k * dim + i) * dim + j] = b.c;
    g.f_[(k * dim + j) * dim + i] = -b.c;
  }
  return g;
}

LieAlgebra LieAlgebra::FromConstants(int dim, std::vector<Rational> f,
                                     std::string name) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (static_cast<int>(f.size()) != dim * dim * dim) {
    throw std::invalid_argument("wrong number of structure constants");
  }
  LieAlgebra g;
  g.dim_ = dim;
  g.f_ = std::move(f);
  g.name_ = std::move(name);
  for (int k = 0; k < dim; ++k) {
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        if (g.f(k, i, j) != -g.f(k, j, i)) {
          throw std::invalid_argument("structure constants not antisymmetric");
        }
      }
    }
  }
  return g;
}

Vector LieAlgebra::Bracket(const Vector& x, const Vector& y) const {
  Vector out(dim_, Rational(0));
  for (int i = 0; i < dim_; ++i) {
    if (IsZero(x[i])) continue;
    for (int j = 0; j < dim_; ++j) {
      if (IsZero(y[j])) continue;
      Rational xy = x[i] * y[j];
      for (int k = 0; k < dim_; ++k) {
        if (!IsZero(f(k, i, j))) out[k] += f(k, i, j) * xy;
      }
    }
  }
  return out;
}

std::vector<rnstruct::Bracket> LieAlgebra::Brackets() const {
  std::vector<rnstruct::Bracket> out;
  for (int i = 0; i < dim_; ++i) {
    for (int j = i + 1; j < dim_; ++j) {
      for (int k = 0; k < dim_; ++k) {
        if (!IsZero(f(k, i, j))) out.push_back({i + 1, j + 1, k + 1, f(k, i, j)});
      }
    }
  }
  return out;
}

std::vector<std::array<int, 4>> CheckJacobi(const LieAlgebra& g) {
  int d = g.dim();
  std::vector<std::array<int, 4>> bad;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          Rational s = 0;
          for (int m = 0; m < d; ++m) {
            s += g.f(m, i, j) * g.f(l, m, k) + g.f(m, j, k) * g.f(l, m, i) +
                 g.f(m, k, i) * g.f(l, m, j);
          }
          if (!IsZero(s)) bad.push_back({i, j, k, l});
        }
      }
    }
  }
  return bad;
}

AdjointData AdjointMatrices(const LieAlgebra& g) {
  int d = g.dim();
  AdjointData a;
  for (int i = 0; i < d; ++i) {
    RMatrix x(d, d), y(d, d);
    for (int p = 0; p < d; ++p) {
      for (int q = 0; q < d; ++q) {
        x(p, q) = -g.f(q, i, p);
        y(p, q) = -g.f(i, p, q);
      }
    }
    a.X.push_back(std::move(x));
    a.Y.push_back(std::move(y));
  }
  return a;
}

RMatrix CoadjointMatrix(const LieAlgebra& g, const Vector& x) {
  int d = g.dim();
  RMatrix m(d, d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) {
      Rational s = 0;
      for (int p = 0; p < d; ++p) {
        if (!IsZero(x[p])) s -= x[p] * g.f(i, p, j);
      }
      m(j, i) = s;
    }
  }
  return m;
}

bool IsAutomorphism(const LieAlgebra& g, const RMatrix& a) {
  int d = g.dim();
  if (a.rows() != d || a.cols() != d) return false;
  if (IsZero(Determinant(a))) return false;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      Vector lhs = a.Apply(g.Bracket(BasisVector(d, i), BasisVector(d, j)));
      Vector rhs = g.Bracket(a.Column(i), a.Column(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Vector BasisVector(int dim, int i) {
  Vector v(dim, Rational(0));
  v[i] = 1;
  return v;
}

}  // namespace rnstruct
