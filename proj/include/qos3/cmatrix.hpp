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

#ifndef QOS3_CMATRIX_HPP
#define QOS3_CMATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace qos3 {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

/// Default numerical tolerance for all unitarity / orthonormality /
/// normalization checks in the library.
inline constexpr double kTol = 1e-9;

/// Dense row-major complex matrix. Small (3x3 and 9x9 in this project),
/// so everything is plain loops with value semantics.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Complex(0, 0)) {}

  static CMat identity(std::size_t n);
  static CMat diagonal(const CVec &entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const CVec &data() const { return data_; }

  CMat dagger() const;
  CVec diag() const;
  double frobenius_norm() const;
  bool all_finite() const;

  CMat operator*(const CMat &rhs) const;
  CVec operator*(const CVec &v) const;
  CMat operator+(const CMat &rhs) const;
  CMat operator-(const CMat &rhs) const;
  CMat operator*(Complex s) const;

  bool same_shape(const CMat &rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  CVec data_;
};

CMat kron(const CMat &a, const CMat &b);
CVec kron(const CVec &a, const CVec &b);

/// <a|b> with the conjugation on the first argument.
Complex inner(const CVec &a, const CVec &b);
double norm(const CVec &v);
bool all_finite(const CVec &v);

/// Entrywise max |u^dag u - I|; zero for an exact unitary.
double unitarity_residual(const CMat &m);

/// Eigenvalues of a Hermitian matrix (ascending), via cyclic complex
/// Jacobi rotations. Intended for the small null-space oracle below.
std::vector<double> hermitian_eigenvalues(CMat a);

/// Singular values of a (ascending): sqrt of the eigenvalues of a^dag a.
std::vector<double> singular_values(const CMat &a);

/// Number of singular values below tol.
int null_space_dimension(const CMat &a, double tol = kTol);

}  // namespace qos3

#endif
