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

#ifndef QOS3_CHANNELS_HPP
#define QOS3_CHANNELS_HPP

#include <string>
#include <utility>

#include "qos3/state.hpp"

namespace qos3 {

/// Index (n, m) of a generalized Bell state / its classical trit pair.
struct BellIndex {
  int n = 0;
  int m = 0;
  BellIndex() = default;
  BellIndex(int n_, int m_);
  std::string str() const { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }
};

/// |Psi_{n,m}> = (1/sqrt3) sum_j e^{2pi i n j / 3} |j> |(j+m) mod 3>.
CVec generalized_bell_vector(BellIndex idx);
StateVector generalized_bell(BellIndex idx, const std::string &label_a,
                             const std::string &label_b);

/// All nine Psi_{n,m} in (n,m)-lexicographic order; outcome k = 3n + m.
MeasurementBasis gbm_basis();

/// (|000> + |111> + |222>) / sqrt3.
StateVector ghz3(const std::string &a, const std::string &b, const std::string &c);

/// {|0>, |1>, |2>}.
MeasurementBasis computational_basis();

/// {f_l = sum_j e^{2pi i l j / 3} |j> / sqrt3 : l = 0, 1, 2}.
MeasurementBasis fourier_basis();

/// Single-qutrit shift correction keyed to a computational outcome:
/// 0 -> I, 1 -> S (|j> -> |j+1>), 2 -> T (|j> -> |j-1>). S and T are
/// mutually inverse.
Unitary shift_correction(int outcome);

/// Two-qutrit permutation that twists the second qutrit by the first:
/// |0 k> -> |0 k>, |1 k> -> |1 (k-1)>, |2 k> -> |2 (k-2)> (mod 3).
Unitary v_gate();

/// sigma^(n,m) = |m><0| + e^{4n pi i/3} |m+1><1| + e^{2n pi i/3} |m+2><2|,
/// the collapse operator of a generalized Bell measurement.
Unitary sigma(BellIndex idx);

/// Parameters of the tunable measurement basis {xi0, xi1, xi2}:
/// xi0 fixed at (1,1,1)/sqrt3, xi1 = e^{i tau1} (x1, y1, -x1-y1), and xi2
/// derived from the constraint system. When the printed constraint formulas
/// degenerate (N below tolerance; this happens exactly at y1 = 0), xi2 falls
/// back to the orthocomplement of {xi0, xi1}, which is the same vector
/// whenever both are defined.
struct BasisParams {
  Complex x1, y1;
  double tau1 = 0, tau2 = 0;
  // Derived:
  Complex z1;
  Complex x2, y2, z2;
  double cap_n = 0;  // 0 marks the degenerate/orthocomplement path

  static BasisParams from_xy(Complex x1, Complex y1, double tau1 = 0, double tau2 = 0);
};

/// The ordered basis {xi0, xi1, xi2} for the given parameters.
MeasurementBasis xi_basis(const BasisParams &p);

/// Diagonal residue operators W_k = sqrt3 * diag(conj xi_k), k = 1, 2: the
/// unique operators for which a shared state U(a|00>+b|11>+c|22>) decomposes
/// as (1/sqrt3) sum_k [U W_k |chi>] (x) |xi_k> with W_0 = I. Not unitary in
/// general (entries can vanish or have unequal moduli).
struct WOperators {
  CMat w1;
  CMat w2;
};
WOperators w_operators(const BasisParams &p);

/// Unitary direction of W^dag for a diagonal W: diag of the phases of the
/// conjugated entries, with 1 substituted where an entry vanishes. This is
/// the only correction a receiver can actually apply.
Unitary phase_direction_dagger(const CMat &w_diag);

/// Named preset bases (tau and phi phases fixed to 0).
enum class CaseId { C1, C2, C3, C4a, C4b };

const char *case_name(CaseId c);
BasisParams preset_params(CaseId c);

struct PresetBasis {
  MeasurementBasis basis;
  WOperators w;
};
PresetBasis preset_basis(CaseId c);

}  // namespace qos3

#endif
