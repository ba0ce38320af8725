// Copyright 2026 The qmeas authors
//
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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qmeas {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. All operator algebra in the library runs
/// through this type; dimensions stay small (object spaces up to ~64, tall
/// isometries up to a few thousand rows), so there is no sparsity, blocking,
/// or expression machinery. Equality is always tolerance-based and the
/// tolerance is an explicit argument.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cplx>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<cplx>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  /// Entrywise complex conjugate (no transposition).
  ComplexMatrix conjugate() const;

  cplx trace() const;
  /// Largest entry modulus, i.e. the max norm.
  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(cplx scale, ComplexMatrix m) {
    m *= scale;
    return m;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

  /// True when every entry of the difference has modulus <= tol.
  bool approx_equal(const ComplexMatrix& other, double tol) const;
  bool is_hermitian(double tol) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

/// Max entry modulus of a - b; the distance used by approx_equal.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product with the fixed index convention
/// (i, j) -> i_a * dim_b + i_b for both rows and columns, i.e. the left
/// factor is the slow index. Every tensor-product space in the library uses
/// this ordering.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of a Hermitian matrix in descending order, computed with a
/// cyclic Jacobi sweep scheme. Deterministic: fixed sweep order, fixed sort.
/// Accuracy is near machine precision for the small dimensions used here.
/// Throws std::invalid_argument if m is not Hermitian within herm_tol.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m,
                                          double herm_tol = 1e-10);

}  // namespace qmeas
