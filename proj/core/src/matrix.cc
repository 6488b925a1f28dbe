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

#include "rnstruct/matrix.h"

#include <utility>

namespace rnstruct {
namespace {

// Bareiss elimination with row pivoting. Returns the rank; *det receives the
// determinant when the matrix is square.
int Bareiss(RMatrix a, Rational* det) {
  int n = a.rows(), m = a.cols();
  int rank = 0;
  int sign = 1;
  Rational prev = 1;
  for (int col = 0; col < m && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r) {
      if (!IsZero(a(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = 0; j < m; ++j) std::swap(a(pivot, j), a(rank, j));
      sign = -sign;
    }
    for (int r = rank + 1; r < n; ++r) {
      for (int j = col + 1; j < m; ++j) {
        a(r, j) = (a(rank, col) * a(r, j) - a(r, col) * a(rank, j)) / prev;
      }
      a(r, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  if (det != nullptr) {
    *det = (n == m && rank == n) ? prev : Rational(0);
    if (sign < 0) *det = -*det;
  }
  return rank;
}

}  // namespace

RMatrix Inverse(const RMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
  int n = m.rows();
  RMatrix a = m;
  RMatrix inv = RMatrix::Identity(n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && IsZero(a(p, c))) ++p;
    if (p == n) throw SingularMatrixError();
    if (p != c) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    Rational s = 1 / a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) *= s;
      inv(c, j) *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || IsZero(a(r, c))) continue;
      Rational f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

int Rank(const RMatrix& m) { return Bareiss(m, nullptr); }

Rational Determinant(const RMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  Rational d;
  Bareiss(m, &d);
  return d;
}

Polynomial Determinant(const PMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return Polynomial(Rational(1));
  if (n == 1) return m(0, 0);
  Polynomial det;
  for (int j = 0; j < n; ++j) {
    if (m(0, j).IsZero()) continue;
    PMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      for (int c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = m(r, c);
      }
    }
    Polynomial term = m(0, j) * Determinant(minor);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

PMatrix ToPolynomialMatrix(const RMatrix& m) {
  PMatrix p(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) p(i, j) = Polynomial(m(i, j));
  }
  return p;
}

RMatrix Evaluate(const PMatrix& m, const Assignment& point) {
  RMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).Evaluate(point);
  }
  return r;
}

std::string ToString(const RMatrix& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    s += i == 0 ? "[" : ", [";
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) s += ", ";
      s += ToString(m(i, j));
    }
    s += "]";
  }
  return s + "]";
}

}  // namespace rnstruct
