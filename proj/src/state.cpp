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

#include "qos3/state.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qos3 {

namespace {

std::size_t pow3(std::size_t n) {
  std::size_t r = 1;
  while (n--) r *= 3;
  return r;
}

}  // namespace

Unitary::Unitary(CMat m) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || (mat_.rows() != 3 && mat_.rows() != 9))
    throw std::invalid_argument("unitary must be 3x3 or 9x9");
  if (!mat_.all_finite()) throw std::invalid_argument("unitary has non-finite entries");
  double res = unitarity_residual(mat_);
  if (res > kTol)
    throw std::invalid_argument("matrix is not unitary (residual " + std::to_string(res) + ")");
}

Unitary Unitary::identity(std::size_t dim) { return Unitary(CMat::identity(dim)); }

StateVector::StateVector(std::vector<std::string> labels, CVec amps)
    : labels_(std::move(labels)), amps_(std::move(amps)) {
  if (labels_.empty()) throw std::invalid_argument("state needs at least one qutrit");
  if (amps_.size() != pow3(labels_.size()))
    throw std::invalid_argument("amplitude count must be 3^num_qutrits");
  if (!all_finite(amps_)) throw std::invalid_argument("state has non-finite amplitudes");
  std::set<std::string> uniq(labels_.begin(), labels_.end());
  if (uniq.size() != labels_.size())
    throw std::invalid_argument("qutrit labels must be unique");
  double n = norm(amps_);
  if (std::abs(n - 1.0) > kTol)
    throw std::invalid_argument("state is not normalized (norm " + std::to_string(n) + ")");
}

StateVector StateVector::single(const std::string &label, const std::array<Complex, 3> &amps) {
  return StateVector({label}, CVec(amps.begin(), amps.end()));
}

StateVector StateVector::basis_state(std::vector<std::string> labels, std::size_t index) {
  CVec amps(pow3(labels.size()), Complex(0, 0));
  amps.at(index) = 1;
  return StateVector(std::move(labels), std::move(amps));
}

std::size_t StateVector::label_index(const std::string &label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::invalid_argument("no qutrit labeled '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

MeasurementBasis::MeasurementBasis(std::vector<CVec> vecs, std::vector<std::string> labels)
    : vectors(std::move(vecs)), outcome_labels(std::move(labels)) {
  if (vectors.empty()) throw std::invalid_argument("empty measurement basis");
  std::size_t d = vectors[0].size();
  if (d != 3 && d != 9) throw std::invalid_argument("measurement basis must have dim 3 or 9");
  if (vectors.size() != d)
    throw std::invalid_argument("measurement basis must span the full space");
  if (outcome_labels.size() != vectors.size())
    throw std::invalid_argument("one outcome label per basis vector required");
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != d) throw std::invalid_argument("ragged measurement basis");
    for (std::size_t j = 0; j < vectors.size(); ++j) {
      Complex g = inner(vectors[i], vectors[j]);
      Complex want = (i == j) ? Complex(1, 0) : Complex(0, 0);
      if (std::abs(g - want) > kTol)
        throw std::invalid_argument("measurement basis is not orthonormal");
    }
  }
}

StateVector tensor(const StateVector &a, const StateVector &b) {
  for (const std::string &la : a.labels())
    for (const std::string &lb : b.labels())
      if (la == lb) throw std::invalid_argument("label collision in tensor: '" + la + "'");
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return StateVector(std::move(labels), kron(a.amps(), b.amps()));
}

namespace {

struct TargetIndexing {
  std::vector<std::size_t> positions;  // positions of targets within labels
};

TargetIndexing make_indexing(const StateVector &s, const std::vector<std::string> &targets) {
  TargetIndexing ix;
  std::set<std::string> seen;
  for (const std::string &t : targets) {
    if (!seen.insert(t).second)
      throw std::invalid_argument("duplicate target label '" + t + "'");
    ix.positions.push_back(s.label_index(t));
  }
  return ix;
}

void decompose_trits(std::size_t full, std::size_t n, std::vector<std::size_t> &trits) {
  for (std::size_t i = n; i-- > 0;) {
    trits[i] = full % 3;
    full /= 3;
  }
}

}  // namespace

StateVector apply_unitary(const StateVector &s, const Unitary &u,
                          const std::vector<std::string> &targets) {
  if (targets.empty() || targets.size() > 2)
    throw std::invalid_argument("apply_unitary supports 1 or 2 target qutrits");
  TargetIndexing ix = make_indexing(s, targets);
  std::size_t td = 1;
  for (std::size_t i = 0; i < targets.size(); ++i) td *= 3;
  if (u.dim() != td)
    throw std::invalid_argument("unitary dimension does not match target count");

  const std::size_t n = s.num_qutrits();
  const std::size_t dim = s.dim();
  CVec out(dim, Complex(0, 0));
  std::vector<std::size_t> trits(n);
  // Strides of each target position in the flat index.
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t i = n; i-- > 1;) stride[i - 1] = stride[i] * 3;

  for (std::size_t full = 0; full < dim; ++full) {
    decompose_trits(full, n, trits);
    std::size_t trow = 0;
    for (std::size_t p : ix.positions) trow = trow * 3 + trits[p];
    // out[full] = sum_col u(trow, col) * s[full with target trits = col]
    for (std::size_t col = 0; col < td; ++col) {
      Complex coeff = u.mat()(trow, col);
      if (coeff == Complex(0, 0)) continue;
      std::ptrdiff_t src = static_cast<std::ptrdiff_t>(full);
      std::size_t c = col;
      for (std::size_t i = ix.positions.size(); i-- > 0;) {
        std::size_t p = ix.positions[i];
        std::ptrdiff_t delta =
            static_cast<std::ptrdiff_t>(c % 3) - static_cast<std::ptrdiff_t>(trits[p]);
        c /= 3;
        src += delta * static_cast<std::ptrdiff_t>(stride[p]);
      }
      out[full] += coeff * s.amps()[static_cast<std::size_t>(src)];
    }
  }
  return StateVector(s.labels(), std::move(out));
}

std::vector<MeasurementRecord> measure(const StateVector &s,
                                       const std::vector<std::string> &targets,
                                       const MeasurementBasis &basis) {
  if (targets.empty()) throw std::invalid_argument("measure needs target qutrits");
  if (targets.size() >= s.num_qutrits())
    throw std::invalid_argument("measurement must leave at least one qutrit");
  TargetIndexing ix = make_indexing(s, targets);
  std::size_t td = 1;
  for (std::size_t i = 0; i < targets.size(); ++i) td *= 3;
  if (basis.dim() != td)
    throw std::invalid_argument("basis dimension does not match measured qutrit count");

  const std::size_t n = s.num_qutrits();
  const std::size_t rest_dim = s.dim() / td;

  // Remaining labels keep their original relative order.
  std::vector<std::string> rest_labels;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(ix.positions.begin(), ix.positions.end(), i) == ix.positions.end())
      rest_labels.push_back(s.labels()[i]);
  }

  // Precompute (target part, rest part) for every flat index.
  std::vector<std::size_t> tpart(s.dim()), rpart(s.dim());
  std::vector<std::size_t> trits(n);
  for (std::size_t full = 0; full < s.dim(); ++full) {
    decompose_trits(full, n, trits);
    std::size_t tp = 0;
    for (std::size_t p : ix.positions) tp = tp * 3 + trits[p];
    std::size_t rp = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::find(ix.positions.begin(), ix.positions.end(), i) != ix.positions.end())
        continue;
      rp = rp * 3 + trits[i];
    }
    tpart[full] = tp;
    rpart[full] = rp;
  }

  std::vector<MeasurementRecord> records;
  records.reserve(basis.vectors.size());
  for (std::size_t k = 0; k < basis.vectors.size(); ++k) {
    const CVec &v = basis.vectors[k];
    CVec amp(rest_dim, Complex(0, 0));
    for (std::size_t full = 0; full < s.dim(); ++full)
      amp[rpart[full]] += std::conj(v[tpart[full]]) * s.amps()[full];
    double p = 0;
    for (const Complex &z : amp) p += std::norm(z);

    MeasurementRecord rec;
    rec.measured_labels = targets;
    rec.outcome_index = static_cast<int>(k);
    if (p < 1e-12) {
      rec.probability = 0;
      rec.negligible = true;
    } else {
      rec.probability = p;
      double inv = 1.0 / std::sqrt(p);
      for (Complex &z : amp) z *= inv;
      rec.post_state = StateVector(rest_labels, std::move(amp));
    }
    records.push_back(std::move(rec));
  }
  return records;
}

double fidelity_up_to_phase(const StateVector &a, const StateVector &b) {
  if (a.labels() != b.labels())
    throw std::invalid_argument("fidelity requires identical qutrit labels");
  return std::abs(inner(a.amps(), b.amps()));
}

}  // namespace qos3
