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

#ifndef RNSTRUCT_MATRIX_H_
#define RNSTRUCT_MATRIX_H_

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rnstruct/polynomial.h"
#include "rnstruct/rational.h"

namespace rnstruct {

inline bool IsZeroValue(const Rational& x) { return IsZero(x); }
inline bool IsZeroValue(const Polynomial& x) { return x.IsZero(); }

// Dense row-major matrix. T is Rational or Polynomial; T{} is zero and T(1)
// is one.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative size");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) {
        throw std::invalid_argument("ragged matrix literal");
      }
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix Identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return data_[i * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[i * cols_ + j]; }

  Matrix Transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  bool IsZero() const {
    for (const auto& x : data_) {
      if (!IsZeroValue(x)) return false;
    }
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    SameShape(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    SameShape(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in product");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (IsZeroValue(x)) continue;
        for (int j = 0; j < b.cols_; ++j) r(i, j) += x * b(k, j);
      }
    }
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix Pow(unsigned e) const {
    if (!square()) throw std::invalid_argument("power of non-square matrix");
    Matrix r = Identity(rows_);
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  T Trace() const {
    T t{};
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  std::vector<T> Column(int j) const {
    std::vector<T> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<T> Row(int i) const {
    return std::vector<T>(data_.begin() + i * cols_,
                          data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> Apply(const std::vector<T>& v) const {
    if (static_cast<int>(v.size()) != cols_) {
      throw std::invalid_argument("shape mismatch in matrix-vector product");
    }
    std::vector<T> r(rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    }
    return r;
  }

 private:
  void SameShape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw std::invalid_argument("shape mismatch");
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using RMatrix = Matrix<Rational>;
using PMatrix = Matrix<Polynomial>;

class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

RMatrix Inverse(const RMatrix& m);  // throws SingularMatrixError
int Rank(const RMatrix& m);         // fraction-free (Bareiss) elimination
Rational Determinant(const RMatrix& m);

// Cofactor expansion; fine for the small sizes used here.
Polynomial Determinant(const PMatrix& m);

PMatrix ToPolynomialMatrix(const RMatrix& m);
// Evaluates every entry; throws if a variable is left unassigned.
RMatrix Evaluate(const PMatrix& m, const Assignment& point);

std::string ToString(const RMatrix& m);

}  // namespace rnstruct

#endif  // RNSTRUCT_MATRIX_H_
