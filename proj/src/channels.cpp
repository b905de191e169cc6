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

#include "qos3/channels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qos3 {

namespace {

constexpr double kPi = std::numbers::pi;
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

Complex unit_phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

BellIndex::BellIndex(int n_, int m_) : n(n_), m(m_) {
  if (n < 0 || n > 2 || m < 0 || m > 2)
    throw std::invalid_argument("Bell index components must be in {0,1,2}");
}

CVec generalized_bell_vector(BellIndex idx) {
  CVec v(9, Complex(0, 0));
  for (int j = 0; j < 3; ++j) {
    int k = (j + idx.m) % 3;
    v[static_cast<std::size_t>(3 * j + k)] =
        unit_phase(2.0 * kPi * idx.n * j / 3.0) * kInvSqrt3;
  }
  return v;
}

StateVector generalized_bell(BellIndex idx, const std::string &label_a,
                             const std::string &label_b) {
  return StateVector({label_a, label_b}, generalized_bell_vector(idx));
}

MeasurementBasis gbm_basis() {
  std::vector<CVec> vectors;
  std::vector<std::string> labels;
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m) {
      BellIndex idx(n, m);
      vectors.push_back(generalized_bell_vector(idx));
      labels.push_back(idx.str());
    }
  return MeasurementBasis(std::move(vectors), std::move(labels));
}

StateVector ghz3(const std::string &a, const std::string &b, const std::string &c) {
  CVec amps(27, Complex(0, 0));
  for (std::size_t j = 0; j < 3; ++j) amps[9 * j + 3 * j + j] = kInvSqrt3;
  return StateVector({a, b, c}, std::move(amps));
}

MeasurementBasis computational_basis() {
  std::vector<CVec> vectors;
  for (std::size_t j = 0; j < 3; ++j) {
    CVec v(3, Complex(0, 0));
    v[j] = 1;
    vectors.push_back(std::move(v));
  }
  return MeasurementBasis(std::move(vectors), {"0", "1", "2"});
}

MeasurementBasis fourier_basis() {
  std::vector<CVec> vectors;
  for (int l = 0; l < 3; ++l) {
    CVec v(3);
    for (int j = 0; j < 3; ++j) v[static_cast<std::size_t>(j)] =
        unit_phase(2.0 * kPi * l * j / 3.0) * kInvSqrt3;
    vectors.push_back(std::move(v));
  }
  return MeasurementBasis(std::move(vectors), {"f0", "f1", "f2"});
}

Unitary shift_correction(int outcome) {
  if (outcome < 0 || outcome > 2)
    throw std::invalid_argument("shift outcome must be in {0,1,2}");
  CMat m(3, 3);
  // 1: S = |0><2| + |2><1| + |1><0|, 2: T = S^dag.
  int step = outcome;
  for (std::size_t j = 0; j < 3; ++j) m((j + static_cast<std::size_t>(step)) % 3, j) = 1;
  return Unitary(std::move(m));
}

Unitary v_gate() {
  CMat m(9, 9);
  for (std::size_t first = 0; first < 3; ++first)
    for (std::size_t second = 0; second < 3; ++second) {
      std::size_t twisted = (second + 2 * first) % 3;  // k - first mod 3
      m(3 * first + twisted, 3 * first + second) = 1;
    }
  return Unitary(std::move(m));
}

Unitary sigma(BellIndex idx) {
  CMat m(3, 3);
  m(static_cast<std::size_t>(idx.m % 3), 0) = 1;
  m(static_cast<std::size_t>((idx.m + 1) % 3), 1) = unit_phase(4.0 * kPi * idx.n / 3.0);
  m(static_cast<std::size_t>((idx.m + 2) % 3), 2) = unit_phase(2.0 * kPi * idx.n / 3.0);
  return Unitary(std::move(m));
}

BasisParams BasisParams::from_xy(Complex x1, Complex y1, double tau1, double tau2) {
  BasisParams p;
  p.x1 = x1;
  p.y1 = y1;
  p.tau1 = tau1;
  p.tau2 = tau2;
  p.z1 = -x1 - y1;
  double constraint = std::norm(x1) + std::norm(y1) + std::norm(x1 + y1);
  if (std::abs(constraint - 1.0) > kTol)
    throw std::invalid_argument("basis parameters violate |x1|^2+|y1|^2+|x1+y1|^2 = 1");

  Complex x2p = -1.0 + 2.0 * x1 * std::conj(x1) + x1 * std::conj(y1);
  Complex y2p = 2.0 * y1 * std::conj(x1) + y1 * std::conj(y1);
  Complex z2p = 1.0 - 2.0 * x1 * std::conj(x1) - 2.0 * y1 * std::conj(x1) -
                x1 * std::conj(y1) - y1 * std::conj(y1);
  double n = std::sqrt(std::norm(x2p) + std::norm(y2p) + std::norm(z2p));
  // Dividing by a tiny n would amplify rounding noise past the
  // orthonormality tolerance, and the two branches agree in direction near
  // the switch, so hand off to the exact orthocomplement well before that.
  if (n > 1e-4) {
    p.cap_n = n;
    p.x2 = x2p / n;
    p.y2 = y2p / n;
    p.z2 = z2p / n;
  } else {
    // Orthocomplement of {xi0, xi1}: the conjugated formal cross product.
    p.cap_n = 0;
    Complex cx = kInvSqrt3 * p.z1 - kInvSqrt3 * p.y1;
    Complex cy = kInvSqrt3 * p.x1 - kInvSqrt3 * p.z1;
    Complex cz = kInvSqrt3 * p.y1 - kInvSqrt3 * p.x1;
    cx = std::conj(cx);
    cy = std::conj(cy);
    cz = std::conj(cz);
    double cn = std::sqrt(std::norm(cx) + std::norm(cy) + std::norm(cz));
    if (cn < kTol) throw std::invalid_argument("degenerate basis parameters");
    p.x2 = cx / cn;
    p.y2 = cy / cn;
    p.z2 = cz / cn;
  }
  return p;
}

MeasurementBasis xi_basis(const BasisParams &p) {
  CVec xi0 = {kInvSqrt3, kInvSqrt3, kInvSqrt3};
  Complex e1 = unit_phase(p.tau1), e2 = unit_phase(p.tau2);
  CVec xi1 = {e1 * p.x1, e1 * p.y1, e1 * p.z1};
  CVec xi2 = {e2 * p.x2, e2 * p.y2, e2 * p.z2};
  return MeasurementBasis({xi0, xi1, xi2}, {"xi0", "xi1", "xi2"});
}

WOperators w_operators(const BasisParams &p) {
  MeasurementBasis b = xi_basis(p);
  const double s3 = std::sqrt(3.0);
  WOperators w;
  w.w1 = CMat::diagonal({s3 * std::conj(b.vectors[1][0]), s3 * std::conj(b.vectors[1][1]),
                         s3 * std::conj(b.vectors[1][2])});
  w.w2 = CMat::diagonal({s3 * std::conj(b.vectors[2][0]), s3 * std::conj(b.vectors[2][1]),
                         s3 * std::conj(b.vectors[2][2])});
  return w;
}

Unitary phase_direction_dagger(const CMat &w_diag) {
  if (w_diag.rows() != 3 || w_diag.cols() != 3)
    throw std::invalid_argument("phase_direction_dagger expects a 3x3 diagonal matrix");
  CVec d(3);
  for (std::size_t j = 0; j < 3; ++j) {
    Complex wj = std::conj(w_diag(j, j));
    double a = std::abs(wj);
    d[j] = (a > kTol) ? wj / a : Complex(1, 0);
  }
  return Unitary(CMat::diagonal(d));
}

const char *case_name(CaseId c) {
  switch (c) {
    case CaseId::C1: return "c1";
    case CaseId::C2: return "c2";
    case CaseId::C3: return "c3";
    case CaseId::C4a: return "c4a";
    case CaseId::C4b: return "c4b";
  }
  return "?";
}

BasisParams preset_params(CaseId c) {
  const double s2 = std::sqrt(2.0);
  switch (c) {
    case CaseId::C1:
      return BasisParams::from_xy(Complex(0, 0), Complex(-1.0 / s2, 0));
    case CaseId::C2:
      return BasisParams::from_xy(Complex(-1.0 / s2, 0), Complex(0, 0));
    case CaseId::C3:
      return BasisParams::from_xy(Complex(1.0 / s2, 0), Complex(-1.0 / s2, 0));
    case CaseId::C4a:
      return BasisParams::from_xy(Complex(kInvSqrt3, 0),
                                  unit_phase(2.0 * kPi / 3.0) * kInvSqrt3);
    case CaseId::C4b:
      return BasisParams::from_xy(Complex(0, 0.5), Complex(0.5, 0));
  }
  throw std::invalid_argument("unknown preset");
}

PresetBasis preset_basis(CaseId c) {
  BasisParams p = preset_params(c);
  return PresetBasis{xi_basis(p), w_operators(p)};
}

}  // namespace qos3
