// Copyright 2026 The QOS3 Authors
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

#ifndef QOS3_STATE_HPP
#define QOS3_STATE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qos3/cmatrix.hpp"

namespace qos3 {

/// A unitary operator on one or two qutrits (dim 3 or 9). Construction
/// validates finiteness and u^dag u = I within kTol.
class Unitary {
 public:
  explicit Unitary(CMat m);

  static Unitary identity(std::size_t dim);

  std::size_t dim() const { return mat_.rows(); }
  const CMat &mat() const { return mat_; }
  Unitary dagger() const { return Unitary(mat_.dagger()); }
  Unitary operator*(const Unitary &rhs) const { return Unitary(mat_ * rhs.mat_); }

 private:
  CMat mat_;
};

/// Pure state of a register of named qutrits. Amplitudes are indexed
/// big-endian: the first label is the most significant trit of the index.
/// Labels are unique; the norm is 1 within kTol at every API boundary.
class StateVector {
 public:
  StateVector(std::vector<std::string> labels, CVec amps);

  static StateVector single(const std::string &label, const std::array<Complex, 3> &amps);
  static StateVector basis_state(std::vector<std::string> labels, std::size_t index);

  std::size_t num_qutrits() const { return labels_.size(); }
  std::size_t dim() const { return amps_.size(); }
  const std::vector<std::string> &labels() const { return labels_; }
  const CVec &amps() const { return amps_; }

  /// Position of a label; throws if absent.
  std::size_t label_index(const std::string &label) const;

 private:
  std::vector<std::string> labels_;
  CVec amps_;
};

/// Ordered orthonormal basis of a 3- or 9-dimensional space, used for
/// projective measurement. Construction validates pairwise orthonormality
/// within kTol and completeness (vector count == dim).
struct MeasurementBasis {
  MeasurementBasis(std::vector<CVec> vectors, std::vector<std::string> outcome_labels);

  std::size_t dim() const { return vectors.empty() ? 0 : vectors[0].size(); }

  std::vector<CVec> vectors;
  std::vector<std::string> outcome_labels;
};

/// One enumerated measurement outcome. For outcomes whose Born probability
/// is below 1e-12, `negligible` is set, `probability` is clamped to 0 and
/// `post_state` is absent (the renormalized state is undefined there).
struct MeasurementRecord {
  std::vector<std::string> measured_labels;
  int outcome_index = 0;
  double probability = 0;
  std::optional<StateVector> post_state;
  bool negligible = false;
};

/// Kronecker product with concatenated labels. Label sets must be disjoint.
StateVector tensor(const StateVector &a, const StateVector &b);

/// Apply `u` to the listed target qutrits (first target = most significant
/// trit of u's index), identity elsewhere. Requires u.dim == 3^targets.
StateVector apply_unitary(const StateVector &s, const Unitary &u,
                          const std::vector<std::string> &targets);

/// Deterministic branch enumeration of a projective measurement: one record
/// per basis vector, with the measured qutrits removed from the register
/// (their post-measurement state is the basis vector itself).
std::vector<MeasurementRecord> measure(const StateVector &s,
                                       const std::vector<std::string> &targets,
                                       const MeasurementBasis &basis);

/// |<a|b>| in [0, 1]; equals 1 within kTol iff the states agree up to a
/// global phase. Requires identical label lists.
double fidelity_up_to_phase(const StateVector &a, const StateVector &b);

}  // namespace qos3

#endif
