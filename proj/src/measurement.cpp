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

#include "qmeas/measurement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qmeas {

namespace {

double completeness_deviation_of(std::size_t dim,
                                 const std::vector<MeasurementEntry>& entries) {
  ComplexMatrix sum(dim, dim);
  for (const auto& e : entries) {
    if (e.weight == 0.0) continue;  // zero-weight grid entries contribute nothing
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        sum(i, j) += e.weight * e.probe.amplitude(i) *
                     std::conj(e.probe.amplitude(j));
  }
  sum -= ComplexMatrix::identity(dim);
  return sum.max_abs();
}

// <probe_a| rho |probe_b> for all entry pairs.
ComplexMatrix probe_sandwich(const MeasurementSpec& spec,
                             const ComplexMatrix& rho) {
  const auto& entries = spec.entries();
  const std::size_t n = entries.size();
  const std::size_t d = spec.object_dim();

  // rho |probe_b> first, so the pair loop is O(n^2 d) instead of O(n^2 d^2).
  std::vector<std::vector<cplx>> rho_probe(n, std::vector<cplx>(d));
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t i = 0; i < d; ++i) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < d; ++j)
        s += rho(i, j) * entries[b].probe.amplitude(j);
      rho_probe[b][i] = s;
    }

  ComplexMatrix c(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < d; ++i)
        s += std::conj(entries[a].probe.amplitude(i)) * rho_probe[b][i];
      c(a, b) = s;
    }
  return c;
}

}  // namespace

MeasurementSpec::MeasurementSpec(std::size_t object_dim,
                                 std::vector<MeasurementEntry> entries,
                                 double completeness_tol)
    : object_dim_(object_dim), entries_(std::move(entries)) {
  if (object_dim_ == 0) {
    throw std::invalid_argument("MeasurementSpec: object dimension 0");
  }
  if (entries_.empty()) {
    throw std::invalid_argument("MeasurementSpec: no entries");
  }
  for (std::size_t a = 0; a < entries_.size(); ++a) {
    const auto& e = entries_[a];
    if (e.probe.dim() != object_dim_ || e.output.dim() != object_dim_) {
      throw std::invalid_argument("MeasurementSpec: entry " +
                                  std::to_string(a) +
                                  " has wrong state dimension");
    }
    if (!(e.weight >= 0.0)) {  // also rejects NaN
      throw std::invalid_argument("MeasurementSpec: entry " +
                                  std::to_string(a) + " has negative weight");
    }
  }
  completeness_deviation_ = completeness_deviation_of(object_dim_, entries_);
  if (completeness_deviation_ > completeness_tol) {
    throw std::invalid_argument(
        "MeasurementSpec: probe family does not resolve the identity "
        "(deviation " +
        std::to_string(completeness_deviation_) + ", tolerance " +
        std::to_string(completeness_tol) + ")");
  }
}

DephasingMatrix::DephasingMatrix(ComplexMatrix r, double psd_tol)
    : r_(std::move(r)) {
  if (!r_.is_square()) {
    throw std::invalid_argument("DephasingMatrix: matrix not square");
  }
  if (!r_.is_hermitian(1e-12)) {
    throw std::invalid_argument("DephasingMatrix: matrix not Hermitian");
  }
  for (std::size_t i = 0; i < r_.rows(); ++i) {
    if (std::abs(r_(i, i) - cplx{1.0, 0.0}) > 1e-12) {
      throw std::invalid_argument("DephasingMatrix: diagonal entry " +
                                  std::to_string(i) + " is not 1");
    }
    r_(i, i) = 1.0;  // snap so the unit diagonal holds exactly
  }
  const auto eig = hermitian_eigenvalues(r_, 1e-10);
  if (eig.back() < -psd_tol) {
    throw std::invalid_argument(
        "DephasingMatrix: matrix not positive semidefinite (min eigenvalue " +
        std::to_string(eig.back()) + ")");
  }
}

DephasingMatrix DephasingMatrix::all_ones(std::size_t n) {
  ComplexMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = 1.0;
  return DephasingMatrix(std::move(r), unchecked_tag{});
}

DephasingMatrix DephasingMatrix::identity(std::size_t n) {
  return DephasingMatrix(ComplexMatrix::identity(n), unchecked_tag{});
}

DephasingMatrix DephasingMatrix::unchecked(ComplexMatrix r) {
  return DephasingMatrix(std::move(r), unchecked_tag{});
}

Isometry::Isometry(std::size_t in_dim, std::size_t out_dim,
                   ComplexMatrix matrix, double tol)
    : in_dim_(in_dim), out_dim_(out_dim), matrix_(std::move(matrix)) {
  if (matrix_.rows() != out_dim_ || matrix_.cols() != in_dim_) {
    throw std::invalid_argument("Isometry: matrix shape does not match dims");
  }
  if (out_dim_ < in_dim_) {
    throw std::invalid_argument("Isometry: output space smaller than input");
  }
  ComplexMatrix gram = matrix_.adjoint() * matrix_;
  gram -= ComplexMatrix::identity(in_dim_);
  if (gram.max_abs() > tol) {
    throw std::invalid_argument("Isometry: V^dagger V deviates from I by " +
                                std::to_string(gram.max_abs()));
  }
}

double Povm::completeness_deviation() const {
  if (elements.empty()) return 0.0;
  ComplexMatrix sum(elements.front().rows(), elements.front().cols());
  for (const auto& e : elements) sum += e;
  sum -= ComplexMatrix::identity(sum.rows());
  return sum.max_abs();
}

Isometry build_isometry(const MeasurementSpec& spec) {
  const std::size_t d = spec.object_dim();
  const std::size_t n = spec.meter_dim();
  ComplexMatrix v(d * n, d);
  for (std::size_t a = 0; a < n; ++a) {
    const auto& e = spec.entries()[a];
    const double root = std::sqrt(e.weight);
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < d; ++i) {
      const cplx out_amp = root * e.output.amplitude(i);
      if (out_amp == cplx{0.0, 0.0}) continue;
      for (std::size_t l = 0; l < d; ++l)
        v(i * n + a, l) += out_amp * std::conj(e.probe.amplitude(l));
    }
  }
  // The isometric property follows from completeness; admit the matrix with
  // a tolerance that tracks the spec's actual deviation.
  const double tol = std::max(1e-10, 2.0 * spec.completeness_deviation());
  return Isometry(d, d * n, std::move(v), tol);
}

double check_isometry(const Isometry& v) {
  ComplexMatrix gram = v.matrix().adjoint() * v.matrix();
  gram -= ComplexMatrix::identity(v.in_dim());
  return gram.max_abs();
}

DensityMatrix apply_coherent(const Isometry& v, const DensityMatrix& rho) {
  if (rho.dim() != v.in_dim()) {
    throw std::invalid_argument("apply_coherent: state dimension mismatch");
  }
  const ComplexMatrix out = v.matrix() * rho.matrix() * v.matrix().adjoint();
  return DensityMatrix::from_matrix(out);
}

ComplexMatrix apply_dephased_matrix(const MeasurementSpec& spec,
                                    const DephasingMatrix& r,
                                    const ComplexMatrix& rho) {
  const std::size_t d = spec.object_dim();
  const std::size_t n = spec.meter_dim();
  if (r.size() != n) {
    throw std::invalid_argument(
        "apply_dephased: dephasing matrix size does not match entry count");
  }
  if (rho.rows() != d || rho.cols() != d) {
    throw std::invalid_argument("apply_dephased: state dimension mismatch");
  }
  const ComplexMatrix sandwich = probe_sandwich(spec, rho);
  const auto& entries = spec.entries();

  ComplexMatrix out(d * n, d * n);
  for (std::size_t a = 0; a < n; ++a) {
    const double wa = std::sqrt(entries[a].weight);
    if (wa == 0.0) continue;
    for (std::size_t b = 0; b < n; ++b) {
      const double wb = std::sqrt(entries[b].weight);
      if (wb == 0.0) continue;
      const cplx coeff = r.matrix()(a, b) * (wa * wb) * sandwich(a, b);
      if (coeff == cplx{0.0, 0.0}) continue;
      for (std::size_t i = 0; i < d; ++i) {
        const cplx left = coeff * entries[a].output.amplitude(i);
        if (left == cplx{0.0, 0.0}) continue;
        for (std::size_t j = 0; j < d; ++j)
          out(i * n + a, j * n + b) +=
              left * std::conj(entries[b].output.amplitude(j));
      }
    }
  }
  return out;
}

DensityMatrix apply_dephased(const MeasurementSpec& spec,
                             const DephasingMatrix& r,
                             const DensityMatrix& rho) {
  return DensityMatrix::from_matrix(
      apply_dephased_matrix(spec, r, rho.matrix()));
}

Povm povm_elements(const MeasurementSpec& spec) {
  Povm povm;
  povm.elements.reserve(spec.meter_dim());
  const std::size_t d = spec.object_dim();
  for (const auto& e : spec.entries()) {
    ComplexMatrix el(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        el(i, j) =
            e.weight * e.probe.amplitude(i) * std::conj(e.probe.amplitude(j));
    povm.elements.push_back(std::move(el));
  }
  return povm;
}

std::vector<double> outcome_distribution(const MeasurementSpec& spec,
                                         const DensityMatrix& rho) {
  if (rho.dim() != spec.object_dim()) {
    throw std::invalid_argument(
        "outcome_distribution: state dimension mismatch");
  }
  std::vector<double> p;
  p.reserve(spec.meter_dim());
  const std::size_t d = spec.object_dim();
  for (const auto& e : spec.entries()) {
    // Tr E_a rho = nu_a <probe_a| rho |probe_a>, real for Hermitian rho.
    cplx s = 0.0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        s += std::conj(e.probe.amplitude(i)) * rho.matrix()(i, j) *
             e.probe.amplitude(j);
    p.push_back(e.weight * s.real());
  }
  return p;
}

DensityMatrix contract_to_meter(const MeasurementSpec& spec,
                                const DephasingMatrix& r,
                                const DensityMatrix& rho) {
  const std::size_t n = spec.meter_dim();
  if (r.size() != n) {
    throw std::invalid_argument(
        "contract_to_meter: dephasing matrix size does not match entry count");
  }
  if (rho.dim() != spec.object_dim()) {
    throw std::invalid_argument("contract_to_meter: state dimension mismatch");
  }
  const ComplexMatrix sandwich = probe_sandwich(spec, rho.matrix());
  const auto& entries = spec.entries();

  ComplexMatrix out(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const double w = std::sqrt(entries[a].weight * entries[b].weight);
      if (w == 0.0) continue;
      // Decoherence factor <output_b|output_a>.
      const cplx q = overlap(entries[b].output, entries[a].output);
      out(a, b) = r.matrix()(a, b) * w * q * sandwich(a, b);
    }
  return DensityMatrix::from_matrix(std::move(out));
}

ComplexMatrix gram_matrix(const MeasurementSpec& spec) {
  const std::size_t n = spec.meter_dim();
  ComplexMatrix q(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      q(a, b) = overlap(spec.entries()[a].output, spec.entries()[b].output);
  return q;
}

std::vector<std::vector<cplx>> minimal_basis_states(
    const MeasurementSpec& spec) {
  const std::size_t d = spec.object_dim();
  const std::size_t n = spec.meter_dim();
  std::vector<std::vector<cplx>> family(d * d, std::vector<cplx>(n, 0.0));
  for (std::size_t a = 0; a < n; ++a) {
    const auto& e = spec.entries()[a];
    const double root = std::sqrt(e.weight);
    if (root == 0.0) continue;
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = 0; l < d; ++l)
        family[k * d + l][a] =
            root * e.output.amplitude(k) * std::conj(e.probe.amplitude(l));
  }
  return family;
}

MeasurementSpec preset_projective(std::size_t dim) {
  std::vector<MeasurementEntry> entries;
  entries.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    entries.push_back(
        {PureState::basis(dim, k), PureState::basis(dim, k), 1.0});
  }
  return MeasurementSpec(dim, std::move(entries));
}

MeasurementSpec preset_entangling(std::size_t dim) {
  // Same measurement data as the projective preset; the two differ only in
  // the dephasing applied afterwards (none vs complete).
  return preset_projective(dim);
}

MeasurementSpec preset_complete_transfer(std::size_t dim) {
  std::vector<MeasurementEntry> entries;
  entries.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    entries.push_back(
        {PureState::basis(dim, k), PureState::basis(dim, 0), 1.0});
  }
  return MeasurementSpec(dim, std::move(entries));
}

MeasurementSpec preset_selected(std::vector<PureState> outputs) {
  if (outputs.empty()) {
    throw std::invalid_argument("preset_selected: no output states");
  }
  const std::size_t dim = outputs.front().dim();
  if (outputs.size() != dim) {
    throw std::invalid_argument(
        "preset_selected: need exactly one output per basis state");
  }
  std::vector<MeasurementEntry> entries;
  entries.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    entries.push_back({PureState::basis(dim, k), std::move(outputs[k]), 1.0});
  }
  return MeasurementSpec(dim, std::move(entries));
}

MeasurementSpec preset_soft(std::size_t dim, std::vector<PureState> probes,
                            std::vector<double> weights,
                            double completeness_tol) {
  if (probes.empty()) {
    throw std::invalid_argument("preset_soft: no probe states");
  }
  if (weights.empty()) {
    if (probes.size() % dim != 0) {
      throw std::invalid_argument(
          "preset_soft: default weights need the probe list to be whole "
          "orthonormal bases");
    }
    // One identity resolution per basis, so each of the n_bases bases carries
    // weight 1/n_bases per state.
    const double w = static_cast<double>(dim) / static_cast<double>(probes.size());
    weights.assign(probes.size(), w);
  }
  if (weights.size() != probes.size()) {
    throw std::invalid_argument("preset_soft: weight count mismatch");
  }
  std::vector<MeasurementEntry> entries;
  entries.reserve(probes.size());
  for (std::size_t a = 0; a < probes.size(); ++a) {
    entries.push_back({probes[a], probes[a], weights[a]});
  }
  return MeasurementSpec(dim, std::move(entries), completeness_tol);
}

}  // namespace qmeas
