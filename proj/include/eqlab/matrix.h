// Copyright 2026 The Eqlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EQLAB_MATRIX_H_
#define EQLAB_MATRIX_H_

#include <initializer_list>
#include <vector>

#include "eqlab/errors.h"
#include "eqlab/rational.h"

namespace eqlab {

// Dense row-major matrix of exact rationals.  All instances are desk scale;
// there is deliberately no sparse or floating-point mode.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {
    EQLAB_CHECK(rows >= 0 && cols >= 0);
  }
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const Rational& at(int r, int c) const { return entries_[Index(r, c)]; }
  Rational& at(int r, int c) { return entries_[Index(r, c)]; }

  const std::vector<Rational>& entries() const { return entries_; }

  // Returns A x for a column vector x of length cols().
  std::vector<Rational> MultiplyVector(const std::vector<Rational>& x) const;
  // Returns x^T A for a row vector x of length rows().
  std::vector<Rational> LeftMultiplyVector(const std::vector<Rational>& x) const;

  Rational MinEntry() const;
  Rational MaxEntry() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  int Index(int r, int c) const {
    EQLAB_CHECK(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return r * cols_ + c;
  }

  int rows_;
  int cols_;
  std::vector<Rational> entries_;
};

// x^T A y, the bilinear form used for expected payoffs.
Rational BilinearForm(const std::vector<Rational>& x, const Matrix& a,
                      const std::vector<Rational>& y);

}  // namespace eqlab

#endif  // EQLAB_MATRIX_H_
