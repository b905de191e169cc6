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

#ifndef QOS3_FAMILIES_HPP
#define QOS3_FAMILIES_HPP

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qos3/channels.hpp"
#include "qos3/rational.hpp"
#include "qos3/state.hpp"

namespace qos3 {

/// The ten restricted single-qutrit families, their unions, and the
/// differences that carry distinct success classes.
enum class FamilyId {
  U1, U2, U3, U4, U5, U6, U7, U8, U9, U10,
  U12, U34, U15, U67, U18, U910,
  U34minus12, U67minus15, U910minus18,
};

bool is_base_family(FamilyId f);
/// Constituent base families (U34minus12 -> {U3, U4}, bases -> themselves).
std::vector<FamilyId> constituent_bases(FamilyId f);
const char *family_name(FamilyId f);
std::optional<FamilyId> parse_family(const std::string &name);

/// Angle parameters of a family's matrix form: 3 angles for the
/// permutation-phase families (U1, U2, U5, U8), 5 for the block families.
struct FamilyParams {
  std::vector<double> mu;
};

std::size_t family_param_count(FamilyId base);

/// The exact matrix form of a base family at the given parameters.
Unitary sample_family(FamilyId base, const FamilyParams &p);

/// Base families containing u, decided structurally from its zero pattern
/// (entries below tol count as zero). The rotation/reflection block pairs
/// (U3/U4, U6/U7, U9/U10) coincide as sets; strictly diagonal blocks report
/// the rotation member only, strictly antidiagonal ones the reflection
/// member only, mixed blocks both.
std::set<FamilyId> classify(const Unitary &u, double tol = kTol);

/// Whether a classified membership set implies membership in `f`
/// (resolving unions and differences).
bool in_family(const std::set<FamilyId> &bases, FamilyId f);

enum class Sign { Plus, Minus, None };
const char *sign_name(Sign s);

struct CommutationSign {
  Sign sign = Sign::None;
  double residual = 0;  // min over both signs of ||uw -+ wu||_F, w scale-normalized
};

/// Tests uw = +wu / uw = -wu at tolerance kTol. w need not be unitary and
/// may be rescaled by any nonzero scalar without changing the result.
CommutationSign commutation_sign(const CMat &u, const CMat &w);

/// Complex dimension of {M : Mw = +-wM}, computed as the null-space
/// dimension of the vectorized 9x9 operator M -> Mw -+ wM.
int commutant_dimension(const CMat &w, Sign which, double tol = kTol);

/// Family-level commutation guarantee against a diagonal w: Plus/Minus when
/// every member of the base family (anti)commutes, None otherwise. Decided
/// from the family's zero pattern: pattern entry (j,k) commutes iff
/// w_j = w_k and anticommutes iff w_j = -w_k.
Sign family_sign(FamilyId base, const CMat &w_diag);

/// True when every member of `declared` is guaranteed to +-commute with w.
bool family_guarantees(FamilyId declared, const CMat &w_diag);

/// Success class of the sharing scheme for an operation with the given
/// memberships under the given preset basis: 1/3 + 1/3 per residue operator
/// whose commutation is guaranteed by some membership.
Rational predicted_probability(const std::set<FamilyId> &memberships, CaseId preset);

// Seeded samplers (used by tests, the table reproduction and the CLI).

/// Haar-style random unitary: Ginibre matrix + Gram-Schmidt + phase fix.
Unitary random_unitary(std::mt19937_64 &rng);

/// Random unitary rejected until every entry modulus >= min_entry, keeping
/// it away from all zero-pattern families.
Unitary generic_unitary(std::mt19937_64 &rng, double min_entry = 0.05);

/// Random normalized qutrit amplitudes; optionally every component modulus
/// >= min_entry.
std::array<Complex, 3> random_chi(std::mt19937_64 &rng, double min_entry = 0.0);

FamilyParams random_family_params(FamilyId base, std::mt19937_64 &rng);

/// Random member of a base family, union, or difference. Differences are
/// sampled with the block angle bounded away from the degenerate corners so
/// the result is never in the subtracted union.
Unitary sample_family_random(FamilyId f, std::mt19937_64 &rng);

/// Random constraint-satisfying basis parameters.
BasisParams random_basis_params(std::mt19937_64 &rng);

}  // namespace qos3

#endif
