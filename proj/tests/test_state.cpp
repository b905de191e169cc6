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

#include <doctest.h>

#include <cmath>
#include <random>

#include "qos3/channels.hpp"
#include "qos3/families.hpp"

using namespace qos3;

namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

StateVector random_state(std::mt19937_64 &rng, std::vector<std::string> labels) {
  std::uniform_real_distribution<double> d(-1, 1);
  std::size_t dim = 1;
  for (std::size_t i = 0; i < labels.size(); ++i) dim *= 3;
  CVec amps(dim);
  double n2 = 0;
  for (Complex &z : amps) {
    z = Complex(d(rng), d(rng));
    n2 += std::norm(z);
  }
  for (Complex &z : amps) z /= std::sqrt(n2);
  return StateVector(std::move(labels), std::move(amps));
}

}  // namespace

TEST_CASE("tensor of basis states concatenates trits big-endian") {
  StateVector zero = StateVector::basis_state({"x"}, 0);
  StateVector prod = tensor(zero, StateVector::basis_state({"y"}, 0));
  CHECK(prod.dim() == 9);
  CHECK(std::abs(prod.amps()[0] - Complex(1, 0)) < 1e-15);
  for (std::size_t i = 1; i < 9; ++i) CHECK(std::abs(prod.amps()[i]) < 1e-15);
}

TEST_CASE("tensor expands a single-qutrit state against |0>") {
  Complex a(0.2, 0.3), b(-0.5, 0.1), g(0.4, 0.6);
  double n = std::sqrt(std::norm(a) + std::norm(b) + std::norm(g));
  a /= n;
  b /= n;
  g /= n;
  StateVector chi = StateVector::single("p", {a, b, g});
  StateVector prod = tensor(chi, StateVector::basis_state({"q"}, 0));
  CVec expect(9, Complex(0, 0));
  expect[0] = a;
  expect[3] = b;
  expect[6] = g;
  for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(prod.amps()[i] - expect[i]) < 1e-15);
}

TEST_CASE("tensor of two Bell pairs: brute-force Kronecker oracle") {
  StateVector left = generalized_bell(BellIndex(0, 0), "a'", "b'");
  StateVector right = generalized_bell(BellIndex(0, 0), "a", "c");
  StateVector prod = tensor(left, right);
  REQUIRE(prod.dim() == 81);
  // Oracle: naive Kronecker of the two 9-vectors.
  CVec expect(81, Complex(0, 0));
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      expect[i * 9 + j] = left.amps()[i] * right.amps()[j];
  int third_amplitudes = 0;
  for (std::size_t i = 0; i < 81; ++i) {
    CHECK(std::abs(prod.amps()[i] - expect[i]) < 1e-15);
    if (std::abs(prod.amps()[i] - Complex(1.0 / 3, 0)) < 1e-12) ++third_amplitudes;
  }
  CHECK(third_amplitudes == 9);
  // The nine hits sit where both pairs are diagonal: index 36*j + 4*k.
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k)
      CHECK(std::abs(prod.amps()[36 * j + 4 * k] - Complex(1.0 / 3, 0)) < 1e-12);
}

TEST_CASE("tensor rejects label collisions") {
  StateVector a = StateVector::basis_state({"x"}, 0);
  CHECK_THROWS_AS(tensor(a, StateVector::basis_state({"x"}, 1)), std::invalid_argument);
}

TEST_CASE("apply_unitary identity and shift examples") {
  std::mt19937_64 rng(5);
  StateVector s = random_state(rng, {"x", "y"});
  StateVector t = apply_unitary(s, Unitary::identity(3), {"y"});
  for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(t.amps()[i] - s.amps()[i]) < 1e-15);

  // S = |0><2| + |2><1| + |1><0| sends |2> to |0>.
  StateVector two = StateVector::basis_state({"x"}, 2);
  StateVector out = apply_unitary(two, shift_correction(1), {"x"});
  CHECK(std::abs(out.amps()[0] - Complex(1, 0)) < 1e-15);
}

TEST_CASE("apply_unitary validates dimensions and labels") {
  StateVector s = StateVector::basis_state({"x", "y"}, 0);
  CHECK_THROWS_AS(apply_unitary(s, Unitary::identity(9), {"x"}), std::invalid_argument);
  CHECK_THROWS_AS(apply_unitary(s, Unitary::identity(3), {"z"}), std::invalid_argument);
}

TEST_CASE("V on (b', b'') of a Bell pair against an independent hand expansion") {
  Complex a(0.2, 0.3), b(-0.5, 0.1), g(0.4, 0.6);
  double n = std::sqrt(std::norm(a) + std::norm(b) + std::norm(g));
  a /= n;
  b /= n;
  g /= n;
  StateVector st = tensor(generalized_bell(BellIndex(0, 0), "a'", "b'"),
                          StateVector::single("b''", {a, b, g}));
  StateVector out = apply_unitary(st, v_gate(), {"b'", "b''"});

  // Hand expansion: { [a|00>+b|11>+g|22>]|0> + [a|22>+b|00>+g|11>]|1>
  //                 + [a|11>+b|22>+g|00>]|2> } / sqrt3, labels (a', b', b'').
  CVec expect(27, Complex(0, 0));
  auto put = [&](int i, int j, int k, Complex v) { expect[9 * i + 3 * j + k] = v * kInvSqrt3; };
  put(0, 0, 0, a);
  put(1, 1, 0, b);
  put(2, 2, 0, g);
  put(2, 2, 1, a);
  put(0, 0, 1, b);
  put(1, 1, 1, g);
  put(1, 1, 2, a);
  put(2, 2, 2, b);
  put(0, 0, 2, g);
  for (std::size_t i = 0; i < 27; ++i) CHECK(std::abs(out.amps()[i] - expect[i]) < 1e-12);
}

TEST_CASE("measuring |0> in the computational basis is deterministic") {
  StateVector s = StateVector::basis_state({"x", "y"}, 0);  // |00>
  auto records = measure(s, {"y"}, computational_basis());
  REQUIRE(records.size() == 3);
  CHECK(records[0].probability == doctest::Approx(1).epsilon(1e-12));
  CHECK(records[1].negligible);
  CHECK(records[2].negligible);
  CHECK(records[1].probability == 0);
  REQUIRE(records[0].post_state.has_value());
  CHECK(records[0].post_state->labels() == std::vector<std::string>{"x"});
}

TEST_CASE("GBM of the four-qutrit product state gives nine outcomes of 1/9") {
  std::mt19937_64 rng(6);
  std::array<Complex, 3> chi = random_chi(rng);
  Unitary u = random_unitary(rng);
  // |J>_{a'b'} = U_{a'} (a|00> + b|11> + g|22>)
  CVec diag(9, Complex(0, 0));
  diag[0] = chi[0];
  diag[4] = chi[1];
  diag[8] = chi[2];
  StateVector j = apply_unitary(StateVector({"a'", "b'"}, diag), u, {"a'"});
  StateVector q = tensor(j, generalized_bell(BellIndex(0, 0), "a", "c"));
  auto records = measure(q, {"a'", "a"}, gbm_basis());
  REQUIRE(records.size() == 9);
  for (const auto &r : records) {
    CHECK(r.probability == doctest::Approx(1.0 / 9).epsilon(1e-10));
    REQUIRE(r.post_state.has_value());
    CHECK(r.post_state->labels() == std::vector<std::string>{"b'", "c"});
  }
}

TEST_CASE("xi measurement of a shared state: equal-modulus basis gives 1/3 each") {
  std::mt19937_64 rng(7);
  std::array<Complex, 3> chi = random_chi(rng);
  Unitary u = random_unitary(rng);
  CVec diag(9, Complex(0, 0));
  diag[0] = chi[0];
  diag[4] = chi[1];
  diag[8] = chi[2];
  StateVector j = apply_unitary(StateVector({"c", "b'"}, diag), u, {"c"});
  auto records = measure(j, {"b'"}, preset_basis(CaseId::C4a).basis);
  REQUIRE(records.size() == 3);
  for (const auto &r : records)
    CHECK(r.probability == doctest::Approx(1.0 / 3).epsilon(1e-10));
  // The xi0 outcome lands on 1/3 for every basis, equal moduli or not.
  auto c1_records = measure(j, {"b'"}, preset_basis(CaseId::C1).basis);
  CHECK(c1_records[0].probability == doctest::Approx(1.0 / 3).epsilon(1e-10));
}

TEST_CASE("measure validates basis dimension") {
  StateVector s = StateVector::basis_state({"x", "y"}, 0);
  CHECK_THROWS_AS(measure(s, {"x", "y"}, computational_basis()), std::invalid_argument);
}

TEST_CASE("fidelity_up_to_phase examples") {
  StateVector zero = StateVector::basis_state({"x"}, 0);
  SUBCASE("global phase is ignored") {
    Complex ph = std::polar(1.0, M_PI / 7);
    StateVector rotated = StateVector::single("x", {ph, 0, 0});
    CHECK(fidelity_up_to_phase(zero, rotated) == doctest::Approx(1).epsilon(1e-12));
  }
  SUBCASE("orthogonal states score zero") {
    StateVector one = StateVector::basis_state({"x"}, 1);
    CHECK(fidelity_up_to_phase(zero, one) == doctest::Approx(0).epsilon(1e-12));
  }
  SUBCASE("uniform overlap with |0> is 1/sqrt3") {
    StateVector mix = StateVector::single("x", {kInvSqrt3, kInvSqrt3, kInvSqrt3});
    CHECK(fidelity_up_to_phase(mix, zero) == doctest::Approx(kInvSqrt3).epsilon(1e-12));
  }
  SUBCASE("label mismatch is rejected") {
    StateVector other = StateVector::basis_state({"y"}, 0);
    CHECK_THROWS_AS(fidelity_up_to_phase(zero, other), std::invalid_argument);
  }
}

TEST_CASE("StateVector construction enforces its invariants") {
  CHECK_THROWS_AS(StateVector({"x"}, CVec{1, 1, 0}), std::invalid_argument);  // norm
  CHECK_THROWS_AS(StateVector({"x", "x"}, CVec(9, Complex(1.0 / 3, 0))),
                  std::invalid_argument);  // duplicate labels
  CHECK_THROWS_AS(StateVector({"x"}, CVec{Complex(NAN, 0), 0, 0}), std::invalid_argument);
}

TEST_CASE("norm preservation over 1000 random states and unitaries") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    StateVector s = random_state(rng, {"x", "y"});
    Unitary u = random_unitary(rng);
    StateVector t = apply_unitary(s, u, {trial % 2 ? "x" : "y"});
    CHECK(std::abs(norm(t.amps()) - 1.0) < 1e-9);
  }
}

TEST_CASE("measurement completeness and resolution of identity") {
  std::mt19937_64 rng(9);
  MeasurementBasis basis = gbm_basis();
  for (int trial = 0; trial < 20; ++trial) {
    StateVector s = random_state(rng, {"x", "y", "z"});
    auto records = measure(s, {"x", "z"}, basis);
    double total = 0;
    for (const auto &r : records) total += r.probability;
    CHECK(total == doctest::Approx(1).epsilon(1e-10));

    // Re-summing sqrt(p) * (basis vector (x) post state), reindexed back to
    // the original label order, reproduces the input amplitudes exactly.
    CVec rebuilt(27, Complex(0, 0));
    for (const auto &r : records) {
      if (!r.post_state) continue;
      const CVec &v = basis.vectors[static_cast<std::size_t>(r.outcome_index)];
      double w = std::sqrt(r.probability);
      for (std::size_t tv = 0; tv < 9; ++tv)
        for (std::size_t rv = 0; rv < 3; ++rv) {
          // targets (x, z) big-endian tv = 3*x + z; rest (y) rv = y.
          std::size_t full = 9 * (tv / 3) + 3 * rv + (tv % 3);
          rebuilt[full] += w * v[tv] * r.post_state->amps()[rv];
        }
    }
    for (std::size_t i = 0; i < 27; ++i) CHECK(std::abs(rebuilt[i] - s.amps()[i]) < 1e-9);
  }
}

TEST_CASE("applying u then its dagger is the identity") {
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    StateVector s = random_state(rng, {"x", "y"});
    Unitary u = random_unitary(rng);
    StateVector t = apply_unitary(apply_unitary(s, u, {"x"}), u.dagger(), {"x"});
    for (std::size_t i = 0; i < 9; ++i) CHECK(std::abs(t.amps()[i] - s.amps()[i]) < 1e-9);
  }
}

TEST_CASE("two-qutrit unitaries act on targets in listed order") {
  // V maps |1>|0> (b'=1, b''=0) to |1>|2>: listed order matters.
  StateVector s = StateVector::basis_state({"b'", "b''"}, 3);  // |10>
  StateVector out = apply_unitary(s, v_gate(), {"b'", "b''"});
  CHECK(std::abs(out.amps()[5] - Complex(1, 0)) < 1e-15);  // |12>
  StateVector swapped = apply_unitary(s, v_gate(), {"b''", "b'"});
  // With the roles swapped the control qutrit is b'' = 0, so nothing moves.
  CHECK(std::abs(swapped.amps()[3] - Complex(1, 0)) < 1e-15);
}
