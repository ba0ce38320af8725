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

#include "qmeas/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qmeas {

PureState::PureState(std::vector<cplx> amplitudes, double norm_tol)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) {
    throw std::invalid_argument("PureState: empty amplitude vector");
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > norm_tol) {
    throw std::invalid_argument("PureState: squared norm " +
                                std::to_string(norm2) +
                                " deviates from 1 beyond tolerance");
  }
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw std::invalid_argument("PureState::basis: index out of range");
  }
  std::vector<cplx> amps(dim, cplx{0.0, 0.0});
  amps[index] = 1.0;
  return PureState(std::move(amps));
}

ComplexMatrix PureState::projector() const {
  const std::size_t d = dim();
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
  return m;
}

cplx overlap(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("overlap: dimension mismatch");
  }
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    s += std::conj(a.amplitude(i)) * b.amplitude(i);
  return s;
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m,
                                         const DensityTolerances& tol) {
  if (!m.is_square()) {
    throw std::invalid_argument("DensityMatrix: matrix not square");
  }
  if (!m.is_hermitian(tol.hermitian)) {
    throw std::invalid_argument(
        "DensityMatrix: matrix not Hermitian within tolerance");
  }
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > tol.trace) {
    throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr) +
                                " deviates from 1 beyond tolerance");
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
  return DensityMatrix(psi.projector());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("maximally_mixed: dim 0");
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= cplx{1.0 / static_cast<double>(dim), 0.0};
  return DensityMatrix(std::move(m));
}

double DensityMatrix::purity() const {
  const double f = matrix_.frobenius_norm();
  return f * f;
}

double DensityMatrix::min_eigenvalue() const {
  const auto eig = hermitian_eigenvalues(matrix_);
  return eig.back();
}

bool DensityMatrix::is_positive_semidefinite(double tol) const {
  return min_eigenvalue() >= -tol;
}

namespace {

ComplexMatrix partial_trace_impl(const ComplexMatrix& m, std::size_t da,
                                 std::size_t db, Factor keep) {
  if (m.rows() != da * db) {
    throw std::invalid_argument(
        "partial_trace: factor dimensions " + std::to_string(da) + "x" +
        std::to_string(db) + " do not multiply to " + std::to_string(m.rows()));
  }
  if (keep == Factor::first) {
    ComplexMatrix out(da, da);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < db; ++k) s += m(i * db + k, j * db + k);
        out(i, j) = s;
      }
    return out;
  }
  ComplexMatrix out(db, db);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < da; ++k) s += m(k * db + i, k * db + j);
      out(i, j) = s;
    }
  return out;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_first,
                            std::size_t dim_second, Factor keep) {
  return DensityMatrix::from_matrix(
      partial_trace_impl(rho.matrix(), dim_first, dim_second, keep));
}

ComplexMatrix partial_trace_matrix(const ComplexMatrix& m,
                                   std::size_t dim_first,
                                   std::size_t dim_second, Factor keep) {
  if (!m.is_square()) {
    throw std::invalid_argument("partial_trace: matrix not square");
  }
  return partial_trace_impl(m, dim_first, dim_second, keep);
}

double entropy_of_spectrum(const std::vector<double>& eigenvalues,
                           double clamp) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -clamp) {
      throw std::domain_error("entropy: eigenvalue " + std::to_string(lambda) +
                              " below the negativity floor");
    }
    if (lambda <= 0.0) continue;  // clamped or exact zero: 0 log 0 == 0
    s -= lambda * std::log2(lambda);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho, double clamp) {
  return entropy_of_spectrum(hermitian_eigenvalues(rho.matrix()), clamp);
}

}  // namespace qmeas
