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

#include "qos3/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qos3 {

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

CMat CMat::diagonal(const CVec &entries) {
  CMat m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

CMat CMat::dagger() const {
  CMat m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

CVec CMat::diag() const {
  std::size_t n = std::min(rows_, cols_);
  CVec d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = (*this)(i, i);
  return d;
}

double CMat::frobenius_norm() const {
  double s = 0;
  for (const Complex &z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool CMat::all_finite() const {
  for (const Complex &z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

CMat CMat::operator*(const CMat &rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
  CMat out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      Complex a = (*this)(r, k);
      if (a == Complex(0, 0)) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

CVec CMat::operator*(const CVec &v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  CVec out(rows_, Complex(0, 0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

CMat CMat::operator+(const CMat &rhs) const {
  if (!same_shape(rhs)) throw std::invalid_argument("matrix sum shape mismatch");
  CMat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

CMat CMat::operator-(const CMat &rhs) const {
  if (!same_shape(rhs)) throw std::invalid_argument("matrix difference shape mismatch");
  CMat out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

CMat CMat::operator*(Complex s) const {
  CMat out = *this;
  for (Complex &z : out.data_) z *= s;
  return out;
}

CMat kron(const CMat &a, const CMat &b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      Complex s = a(ar, ac);
      if (s == Complex(0, 0)) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
    }
  return out;
}

CVec kron(const CVec &a, const CVec &b) {
  CVec out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

Complex inner(const CVec &a, const CVec &b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner product size mismatch");
  Complex s(0, 0);
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(const CVec &v) {
  double s = 0;
  for (const Complex &z : v) s += std::norm(z);
  return std::sqrt(s);
}

bool all_finite(const CVec &v) {
  for (const Complex &z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

double unitarity_residual(const CMat &m) {
  if (m.rows() != m.cols()) return 1.0;
  CMat g = m.dagger() * m;
  double worst = 0;
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) {
      Complex want = (r == c) ? Complex(1, 0) : Complex(0, 0);
      worst = std::max(worst, std::abs(g(r, c) - want));
    }
  return worst;
}

std::vector<double> hermitian_eigenvalues(CMat a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("hermitian_eigenvalues: not square");
  const double scale = std::max(a.frobenius_norm(), 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) < 1e-15 * scale) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double b = std::abs(apq);
        if (b < 1e-18 * scale) continue;
        const Complex phase = apq / b;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = 0.5 * std::atan2(2 * b, aqq - app);
        const double c = std::cos(theta), s = std::sin(theta);
        // J = diag(1, conj(phase)) * [[c, s], [-s, c]] restricted to (p, q);
        // apply A <- J^dag A J.
        for (std::size_t i = 0; i < n; ++i) {  // columns
          Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * std::conj(phase) * aiq;
          a(i, q) = s * aip + c * std::conj(phase) * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {  // rows
          Complex api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - s * phase * aqi;
          a(q, i) = s * api + c * phase * aqi;
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

std::vector<double> singular_values(const CMat &a) {
  std::vector<double> eig = hermitian_eigenvalues(a.dagger() * a);
  for (double &e : eig) e = std::sqrt(std::max(e, 0.0));
  return eig;
}

int null_space_dimension(const CMat &a, double tol) {
  int count = 0;
  for (double sv : singular_values(a))
    if (sv < tol) ++count;
  return count;
}

}  // namespace qos3
