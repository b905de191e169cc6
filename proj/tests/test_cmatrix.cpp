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

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qos3;

namespace {

CMat random_matrix(std::mt19937_64 &rng, std::size_t n) {
  std::uniform_real_distribution<double> d(-1, 1);
  CMat m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Complex(d(rng), d(rng));
  return m;
}

}  // namespace

TEST_CASE("kron matches a hand-rolled triple loop") {
  std::mt19937_64 rng(1);
  CMat a = random_matrix(rng, 3), b = random_matrix(rng, 3);
  CMat k = kron(a, b);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      Complex expect = a(i / 3, j / 3) * b(i % 3, j % 3);
      CHECK(std::abs(k(i, j) - expect) < 1e-15);
    }
}

TEST_CASE("inner product conjugates the left argument") {
  CVec a = {Complex(0, 1), Complex(1, 0)};
  CVec b = {Complex(0, 1), Complex(0, 0)};
  CHECK(std::abs(inner(a, b) - Complex(1, 0)) < 1e-15);
}

TEST_CASE("unitarity residual separates unitaries from the rest") {
  CHECK(unitarity_residual(CMat::identity(3)) < 1e-15);
  CMat m = CMat::identity(3);
  m(0, 0) = 2;
  CHECK(unitarity_residual(m) > 1);
}

TEST_CASE("hermitian eigenvalues of a known matrix") {
  // diag(1, 3) rotated: eigenvalues must survive a similarity transform.
  CMat a(2, 2);
  a(0, 0) = 2;
  a(0, 1) = Complex(0, -1);
  a(1, 0) = Complex(0, 1);
  a(1, 1) = 2;
  auto eig = hermitian_eigenvalues(a);  // 2 +- 1
  REQUIRE(eig.size() == 2);
  CHECK(eig[0] == doctest::Approx(1).epsilon(1e-12));
  CHECK(eig[1] == doctest::Approx(3).epsilon(1e-12));
}

TEST_CASE("eigenvalue sum and square-sum match trace invariants on random hermitians") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    CMat g = random_matrix(rng, 9);
    CMat h = g + g.dagger();
    auto eig = hermitian_eigenvalues(h);
    double trace = 0, frob2 = 0;
    for (std::size_t i = 0; i < 9; ++i) trace += h(i, i).real();
    for (const Complex &z : h.data()) frob2 += std::norm(z);
    double esum = 0, e2sum = 0;
    for (double e : eig) {
      esum += e;
      e2sum += e * e;
    }
    CHECK(esum == doctest::Approx(trace).epsilon(1e-10));
    CHECK(e2sum == doctest::Approx(frob2).epsilon(1e-10));
  }
}

TEST_CASE("null space dimension via singular values matches construction") {
  std::mt19937_64 rng(3);
  // Build a 9x9 operator with a known rank: product of a random matrix and
  // a projector that kills `k` coordinates.
  for (int k = 0; k <= 4; ++k) {
    CMat g = random_matrix(rng, 9);
    CMat p(9, 9);
    for (std::size_t i = 0; i < 9 - static_cast<std::size_t>(k); ++i) p(i, i) = 1;
    CMat a = g * p;
    CHECK(null_space_dimension(a, 1e-9) == k);
  }
}
