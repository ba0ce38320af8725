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
#include "qmeas/states.hpp"

namespace qmeas {

/// One indexed branch of a generalized measurement: the probe state whose
/// overlap with the input is routed to this outcome, the object state left
/// behind when the outcome fires, and the nonnegative multiplicity weight.
struct MeasurementEntry {
  PureState probe;
  PureState output;
  double weight;
};

/// A generalized partially-destructive measurement on a D-dimensional object,
/// given as an ordered family { (probe_a, output_a, nu_a) }. The meter space
/// has one orthonormal basis vector per entry, ordered by entry index.
///
/// Validity requires the probe family to resolve the identity:
///   sum_a nu_a |probe_a><probe_a| = I  within completeness_tol.
/// Discrete hand-built specs meet this exactly (tol 1e-10); quadrature-built
/// specs meet it to a resolution-dependent deviation, which stays queryable
/// through completeness_deviation().
class MeasurementSpec {
 public:
  MeasurementSpec(std::size_t object_dim, std::vector<MeasurementEntry> entries,
                  double completeness_tol = 1e-10);

  std::size_t object_dim() const { return object_dim_; }
  std::size_t meter_dim() const { return entries_.size(); }
  const std::vector<MeasurementEntry>& entries() const { return entries_; }

  /// Max-entry deviation of sum nu |probe><probe| from the identity.
  double completeness_deviation() const { return completeness_deviation_; }

 private:
  std::size_t object_dim_;
  std::vector<MeasurementEntry> entries_;
  double completeness_deviation_;
};

/// Unit-diagonal positive-semidefinite matrix suppressing coherence between
/// outcome branches. All-ones leaves the measurement fully coherent; the
/// identity dequantizes it completely.
class DephasingMatrix {
 public:
  explicit DephasingMatrix(ComplexMatrix r, double psd_tol = 1e-10);

  static DephasingMatrix all_ones(std::size_t n);
  static DephasingMatrix identity(std::size_t n);
  /// Skips validation. Exists so diagnostic paths can probe matrices that an
  /// ordinary construction would reject.
  static DephasingMatrix unchecked(ComplexMatrix r);

  std::size_t size() const { return r_.rows(); }
  const ComplexMatrix& matrix() const { return r_; }

 private:
  struct unchecked_tag {};
  DephasingMatrix(ComplexMatrix r, unchecked_tag) : r_(std::move(r)) {}
  ComplexMatrix r_;
};

/// Linear map V with V^dagger V = I, stored as an out_dim x in_dim matrix.
class Isometry {
 public:
  Isometry(std::size_t in_dim, std::size_t out_dim, ComplexMatrix matrix,
           double tol = 1e-10);

  std::size_t in_dim() const { return in_dim_; }
  std::size_t out_dim() const { return out_dim_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  std::size_t in_dim_;
  std::size_t out_dim_;
  ComplexMatrix matrix_;
};

/// Positive operator valued measure on the object space.
struct Povm {
  std::vector<ComplexMatrix> elements;

  /// Max-entry deviation of sum_a E_a from the identity.
  double completeness_deviation() const;
};

/// The measurement isometry
///   V = sum_a sqrt(nu_a) |output_a>_A |a>_B <probe_a|_A
/// into the object (x) meter space with joint index i_A * meter_dim + i_B.
/// Throws if the spec's completeness deviation exceeds its tolerance contract
/// (already enforced at spec construction).
Isometry build_isometry(const MeasurementSpec& spec);

/// Max-entry deviation of V^dagger V from the identity; callers classify
/// pass/fail against their own tolerance.
double check_isometry(const Isometry& v);

/// V rho V^dagger on the joint object (x) meter space. Preserves purity.
DensityMatrix apply_coherent(const Isometry& v, const DensityMatrix& rho);

/// The dephased measurement superoperator applied by direct double sum,
///   M rho = sum_ab R_ab sqrt(nu_a nu_b)
///           |output_a>|a> <probe_a| rho |probe_b> <b|<output_b|.
/// R all-ones reproduces apply_coherent; R identity dequantizes completely.
DensityMatrix apply_dephased(const MeasurementSpec& spec,
                             const DephasingMatrix& r,
                             const DensityMatrix& rho);

/// Same action on an arbitrary (not necessarily state) matrix. Needed by
/// superoperator-level consumers; trace is only preserved for trace-one
/// input.
ComplexMatrix apply_dephased_matrix(const MeasurementSpec& spec,
                                    const DephasingMatrix& r,
                                    const ComplexMatrix& rho);

/// POVM elements E_a = nu_a |probe_a><probe_a|; rank one, completeness
/// inherited from the spec.
Povm povm_elements(const MeasurementSpec& spec);

/// Outcome distribution P(a) = Tr E_a rho. Independent of any dephasing.
std::vector<double> outcome_distribution(const MeasurementSpec& spec,
                                         const DensityMatrix& rho);

/// The contracted object-to-meter channel: the meter state
///   (rho_B)_ab = R_ab sqrt(nu_a nu_b) <output_b|output_a>
///                <probe_a| rho |probe_b>,
/// identical to the meter reduction of apply_dephased but computed without
/// materializing the joint state.
DensityMatrix contract_to_meter(const MeasurementSpec& spec,
                                const DephasingMatrix& r,
                                const DensityMatrix& rho);

/// Gram matrix Q_ab = <output_a|output_b> of the output family; Hermitian,
/// positive semidefinite, unit diagonal. This is the decoherence factor that
/// decides how the initial information splits between object and meter.
ComplexMatrix gram_matrix(const MeasurementSpec& spec);

/// The D^2 meter vectors |kl~>_B of the minimal-basis representation
///   V = sum_kl |k>_A |kl~>_B <l|_A,
/// returned flat with index k * D + l. The vectors are generally neither
/// normalized nor orthogonal; their Gram structure carries the whole
/// measurement.
std::vector<std::vector<cplx>> minimal_basis_states(
    const MeasurementSpec& spec);

// Presets reproducing the named special cases.

/// Probes and outputs both the computational basis, unit weights. The
/// fully coherent use is the entangling measurement |k> -> |k>_A |k>_B; the
/// projective measurement is the same spec followed by complete dephasing.
MeasurementSpec preset_projective(std::size_t dim);
MeasurementSpec preset_entangling(std::size_t dim);

/// Probes the computational basis, outputs all equal to |0>: the object
/// forgets everything and the meter receives the full initial state.
MeasurementSpec preset_complete_transfer(std::size_t dim);

/// Orthogonal probes (computational basis) with an arbitrary corrected
/// output family, one output per basis state.
MeasurementSpec preset_selected(std::vector<PureState> outputs);

/// Overcomplete probing that leaves the object in the probed state
/// (outputs == probes). Weights must make the probe family resolve the
/// identity; when omitted they default to 1/n_bases for a probe list formed
/// by whole orthonormal bases (dim divides the list length).
MeasurementSpec preset_soft(std::size_t dim, std::vector<PureState> probes,
                            std::vector<double> weights = {},
                            double completeness_tol = 1e-10);

}  // namespace qmeas
