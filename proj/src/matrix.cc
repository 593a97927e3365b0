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

#include "eqlab/matrix.h"

namespace eqlab {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw InputError("ragged matrix initializer");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

std::vector<Rational> Matrix::MultiplyVector(
    const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_) {
    throw InputError("matrix-vector dimension mismatch");
  }
  std::vector<Rational> result(rows_);
  for (int r = 0; r < rows_; ++r) {
    Rational acc;
    for (int c = 0; c < cols_; ++c) acc += at(r, c) * x[c];
    result[r] = acc;
  }
  return result;
}

std::vector<Rational> Matrix::LeftMultiplyVector(
    const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != rows_) {
    throw InputError("vector-matrix dimension mismatch");
  }
  std::vector<Rational> result(cols_);
  for (int c = 0; c < cols_; ++c) {
    Rational acc;
    for (int r = 0; r < rows_; ++r) acc += x[r] * at(r, c);
    result[c] = acc;
  }
  return result;
}

Rational Matrix::MinEntry() const {
  EQLAB_CHECK(!entries_.empty());
  Rational m = entries_[0];
  for (const Rational& e : entries_) m = Min(m, e);
  return m;
}

Rational Matrix::MaxEntry() const {
  EQLAB_CHECK(!entries_.empty());
  Rational m = entries_[0];
  for (const Rational& e : entries_) m = Max(m, e);
  return m;
}

Rational BilinearForm(const std::vector<Rational>& x, const Matrix& a,
                      const std::vector<Rational>& y) {
  if (static_cast<int>(x.size()) != a.rows() ||
      static_cast<int>(y.size()) != a.cols()) {
    throw InputError("bilinear form dimension mismatch");
  }
  Rational acc;
  for (int r = 0; r < a.rows(); ++r) {
    if (x[r].Sign() == 0) continue;
    Rational inner;
    for (int c = 0; c < a.cols(); ++c) inner += a.at(r, c) * y[c];
    acc += x[r] * inner;
  }
  return acc;
}

}  // namespace eqlab
