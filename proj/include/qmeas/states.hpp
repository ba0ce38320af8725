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

#include <cstddef>
#include <vector>

#include "qmeas/complex_matrix.hpp"

namespace qmeas {

/// Normalized pure state on a finite-dimensional space. The squared norm is
/// checked at construction (default window 1e-12); amplitudes are immutable
/// afterwards.
class PureState {
 public:
  explicit PureState(std::vector<cplx> amplitudes, double norm_tol = 1e-12);

  static PureState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<cplx>& amplitudes() const { return amplitudes_; }
  cplx amplitude(std::size_t i) const { return amplitudes_[i]; }

  /// |psi><psi| as a dense matrix.
  ComplexMatrix projector() const;

 private:
  std::vector<cplx> amplitudes_;
};

/// <a|b>, conjugating the first argument. Throws on dimension mismatch.
cplx overlap(const PureState& a, const PureState& b);

/// Tolerances applied when admitting a matrix as a density matrix.
struct DensityTolerances {
  double hermitian = 1e-12;
  double trace = 1e-10;
  /// Most negative eigenvalue still treated as quadrature noise.
  double eigenvalue_floor = 1e-10;
};

/// Hermitian, unit-trace operator with nonnegative spectrum. Hermiticity and
/// trace are enforced at construction; the (more expensive) eigenvalue check
/// is available as is_positive_semidefinite and is asserted by the tests and
/// at the small fixed-size construction sites.
class DensityMatrix {
 public:
  static DensityMatrix from_matrix(ComplexMatrix m,
                                   const DensityTolerances& tol = {});
  static DensityMatrix pure(const PureState& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// Tr rho^2; equals the squared Frobenius norm for Hermitian rho.
  double purity() const;
  double min_eigenvalue() const;
  bool is_positive_semidefinite(double tol = 1e-10) const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

enum class Factor { first, second };

/// Reduced density matrix of a bipartite state with joint index
/// i = i_first * dim_second + i_second. Trace-preserving. Throws when
/// dim_first * dim_second != rho.dim().
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_first,
                            std::size_t dim_second, Factor keep);

/// Same contraction on a raw square matrix; used where the input is not a
/// state (superoperator images, test oracles).
ComplexMatrix partial_trace_matrix(const ComplexMatrix& m,
                                   std::size_t dim_first,
                                   std::size_t dim_second, Factor keep);

/// Von Neumann entropy -sum lambda_i log2 lambda_i in bits, with
/// 0 log2 0 == 0. Eigenvalues in [-clamp, 0) are treated as quadrature noise
/// and clamped to zero; anything below -clamp throws std::domain_error.
double von_neumann_entropy(const DensityMatrix& rho, double clamp = 1e-10);

/// Entropy of an explicit probability-like spectrum, same clamping rules.
double entropy_of_spectrum(const std::vector<double>& eigenvalues,
                           double clamp = 1e-10);

}  // namespace qmeas
