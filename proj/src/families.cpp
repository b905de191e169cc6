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

#include "qos3/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace qos3 {

namespace {

constexpr double kPi = std::numbers::pi;

Complex phase(double a) { return std::polar(1.0, a); }

// Zero patterns of the base families: the index pairs allowed to be nonzero.
const std::vector<std::pair<int, int>> &pattern(FamilyId base) {
  static const std::map<FamilyId, std::vector<std::pair<int, int>>> kPatterns = {
      {FamilyId::U1, {{0, 0}, {1, 1}, {2, 2}}},
      {FamilyId::U2, {{0, 0}, {1, 2}, {2, 1}}},
      {FamilyId::U3, {{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}},
      {FamilyId::U4, {{0, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}}},
      {FamilyId::U5, {{0, 2}, {1, 1}, {2, 0}}},
      {FamilyId::U6, {{0, 0}, {0, 2}, {1, 1}, {2, 0}, {2, 2}}},
      {FamilyId::U7, {{0, 0}, {0, 2}, {1, 1}, {2, 0}, {2, 2}}},
      {FamilyId::U8, {{0, 1}, {1, 0}, {2, 2}}},
      {FamilyId::U9, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}},
      {FamilyId::U10, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}}},
  };
  return kPatterns.at(base);
}

// Generic U(2) block embedded at rows/cols (i, j) with the leftover phase
// slot at k. `reflect` flips to the second printed parametrization.
Unitary block_family(int i, int j, int k, const FamilyParams &p, bool reflect) {
  const double m1 = p.mu[0], m2 = p.mu[1], m3 = p.mu[2], m4 = p.mu[3], m5 = p.mu[4];
  CMat u(3, 3);
  u(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = phase(m1);
  double c = std::cos(m5), s = std::sin(m5);
  auto at = [&](int r, int cc) -> Complex & {
    return u(static_cast<std::size_t>(r), static_cast<std::size_t>(cc));
  };
  at(i, i) = c * phase(m2 + m4);
  at(i, j) = s * phase(m3 + m4);
  if (!reflect) {
    at(j, i) = -s * phase(-(m3 - m4));
    at(j, j) = c * phase(-(m2 - m4));
  } else {
    at(j, i) = s * phase(-(m3 - m4));
    at(j, j) = -c * phase(-(m2 - m4));
  }
  return Unitary(std::move(u));
}

double uniform(std::mt19937_64 &rng, double lo, double hi) {
  // 53-bit mantissa draw; deterministic across runs for a fixed seed.
  double x = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
  return lo + x * (hi - lo);
}

Complex gaussian_pair(std::mt19937_64 &rng) {
  // Box-Muller, hand-rolled so output never depends on libstdc++ internals.
  double u1 = uniform(rng, 1e-12, 1.0);
  double u2 = uniform(rng, 0.0, 2.0 * kPi);
  double r = std::sqrt(-2.0 * std::log(u1));
  return Complex(r * std::cos(u2), r * std::sin(u2));
}

}  // namespace

bool is_base_family(FamilyId f) {
  switch (f) {
    case FamilyId::U1: case FamilyId::U2: case FamilyId::U3: case FamilyId::U4:
    case FamilyId::U5: case FamilyId::U6: case FamilyId::U7: case FamilyId::U8:
    case FamilyId::U9: case FamilyId::U10:
      return true;
    default:
      return false;
  }
}

std::vector<FamilyId> constituent_bases(FamilyId f) {
  switch (f) {
    case FamilyId::U12: return {FamilyId::U1, FamilyId::U2};
    case FamilyId::U34: return {FamilyId::U3, FamilyId::U4};
    case FamilyId::U15: return {FamilyId::U1, FamilyId::U5};
    case FamilyId::U67: return {FamilyId::U6, FamilyId::U7};
    case FamilyId::U18: return {FamilyId::U1, FamilyId::U8};
    case FamilyId::U910: return {FamilyId::U9, FamilyId::U10};
    case FamilyId::U34minus12: return {FamilyId::U3, FamilyId::U4};
    case FamilyId::U67minus15: return {FamilyId::U6, FamilyId::U7};
    case FamilyId::U910minus18: return {FamilyId::U9, FamilyId::U10};
    default: return {f};
  }
}

const char *family_name(FamilyId f) {
  switch (f) {
    case FamilyId::U1: return "U1";
    case FamilyId::U2: return "U2";
    case FamilyId::U3: return "U3";
    case FamilyId::U4: return "U4";
    case FamilyId::U5: return "U5";
    case FamilyId::U6: return "U6";
    case FamilyId::U7: return "U7";
    case FamilyId::U8: return "U8";
    case FamilyId::U9: return "U9";
    case FamilyId::U10: return "U10";
    case FamilyId::U12: return "U12";
    case FamilyId::U34: return "U34";
    case FamilyId::U15: return "U15";
    case FamilyId::U67: return "U67";
    case FamilyId::U18: return "U18";
    case FamilyId::U910: return "U910";
    case FamilyId::U34minus12: return "U34\\12";
    case FamilyId::U67minus15: return "U67\\15";
    case FamilyId::U910minus18: return "U910\\18";
  }
  return "?";
}

std::optional<FamilyId> parse_family(const std::string &name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  static const std::map<std::string, FamilyId> kNames = {
      {"u1", FamilyId::U1}, {"u2", FamilyId::U2}, {"u3", FamilyId::U3},
      {"u4", FamilyId::U4}, {"u5", FamilyId::U5}, {"u6", FamilyId::U6},
      {"u7", FamilyId::U7}, {"u8", FamilyId::U8}, {"u9", FamilyId::U9},
      {"u10", FamilyId::U10}, {"u12", FamilyId::U12}, {"u34", FamilyId::U34},
      {"u15", FamilyId::U15}, {"u67", FamilyId::U67}, {"u18", FamilyId::U18},
      {"u910", FamilyId::U910},
      {"u34minus12", FamilyId::U34minus12}, {"u34\\12", FamilyId::U34minus12},
      {"u67minus15", FamilyId::U67minus15}, {"u67\\15", FamilyId::U67minus15},
      {"u910minus18", FamilyId::U910minus18}, {"u910\\18", FamilyId::U910minus18},
  };
  auto it = kNames.find(s);
  if (it == kNames.end()) return std::nullopt;
  return it->second;
}

std::size_t family_param_count(FamilyId base) {
  switch (base) {
    case FamilyId::U1: case FamilyId::U2: case FamilyId::U5: case FamilyId::U8:
      return 3;
    case FamilyId::U3: case FamilyId::U4: case FamilyId::U6: case FamilyId::U7:
    case FamilyId::U9: case FamilyId::U10:
      return 5;
    default:
      throw std::invalid_argument("family has no single matrix form");
  }
}

Unitary sample_family(FamilyId base, const FamilyParams &p) {
  if (!is_base_family(base))
    throw std::invalid_argument("sample_family requires a base family");
  if (p.mu.size() != family_param_count(base))
    throw std::invalid_argument("wrong parameter count for family");
  const std::vector<double> &m = p.mu;
  CMat u(3, 3);
  switch (base) {
    case FamilyId::U1:
      u(0, 0) = phase(m[0]); u(1, 1) = phase(m[1]); u(2, 2) = phase(m[2]);
      return Unitary(std::move(u));
    case FamilyId::U2:
      u(0, 0) = phase(m[0]); u(1, 2) = phase(m[1]); u(2, 1) = phase(m[2]);
      return Unitary(std::move(u));
    case FamilyId::U5:
      u(0, 2) = phase(m[0]); u(1, 1) = phase(m[1]); u(2, 0) = phase(m[2]);
      return Unitary(std::move(u));
    case FamilyId::U8:
      u(0, 1) = phase(m[0]); u(1, 0) = phase(m[1]); u(2, 2) = phase(m[2]);
      return Unitary(std::move(u));
    case FamilyId::U3: return block_family(1, 2, 0, p, false);
    case FamilyId::U4: return block_family(1, 2, 0, p, true);
    case FamilyId::U6: return block_family(0, 2, 1, p, false);
    case FamilyId::U7: return block_family(0, 2, 1, p, true);
    case FamilyId::U9: return block_family(0, 1, 2, p, false);
    case FamilyId::U10: return block_family(0, 1, 2, p, true);
    default:
      throw std::invalid_argument("unreachable");
  }
}

namespace {

// Block family membership with the diagonal/antidiagonal tie-break.
// (i, j) are the block rows/cols, k the isolated slot; returns
// {rotation member?, reflection member?}.
std::pair<bool, bool> block_membership(const CMat &u, int i, int j, int k, double tol) {
  auto z = [&](int r, int c) {
    return std::abs(u(static_cast<std::size_t>(r), static_cast<std::size_t>(c))) <= tol;
  };
  // The isolated slot must be decoupled.
  if (!(z(k, i) && z(k, j) && z(i, k) && z(j, k))) return {false, false};
  bool diag_block = z(i, j) && z(j, i);
  bool anti_block = z(i, i) && z(j, j);
  if (diag_block && !anti_block) return {true, false};
  if (anti_block && !diag_block) return {false, true};
  return {true, true};
}

}  // namespace

std::set<FamilyId> classify(const Unitary &u, double tol) {
  const CMat &m = u.mat();
  if (m.rows() != 3) throw std::invalid_argument("classify expects a 3x3 unitary");
  auto z = [&](int r, int c) {
    return std::abs(m(static_cast<std::size_t>(r), static_cast<std::size_t>(c))) <= tol;
  };
  std::set<FamilyId> out;
  auto matches_pattern = [&](FamilyId f) {
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        bool allowed = false;
        for (auto [pr, pc] : pattern(f))
          if (pr == r && pc == c) allowed = true;
        if (!allowed && !z(r, c)) return false;
      }
    return true;
  };
  if (matches_pattern(FamilyId::U1)) out.insert(FamilyId::U1);
  if (matches_pattern(FamilyId::U2)) out.insert(FamilyId::U2);
  if (matches_pattern(FamilyId::U5)) out.insert(FamilyId::U5);
  if (matches_pattern(FamilyId::U8)) out.insert(FamilyId::U8);
  auto [u3, u4] = block_membership(m, 1, 2, 0, tol);
  if (u3) out.insert(FamilyId::U3);
  if (u4) out.insert(FamilyId::U4);
  auto [u6, u7] = block_membership(m, 0, 2, 1, tol);
  if (u6) out.insert(FamilyId::U6);
  if (u7) out.insert(FamilyId::U7);
  auto [u9, u10] = block_membership(m, 0, 1, 2, tol);
  if (u9) out.insert(FamilyId::U9);
  if (u10) out.insert(FamilyId::U10);
  return out;
}

bool in_family(const std::set<FamilyId> &bases, FamilyId f) {
  switch (f) {
    case FamilyId::U34minus12:
      return in_family(bases, FamilyId::U34) && !in_family(bases, FamilyId::U12);
    case FamilyId::U67minus15:
      return in_family(bases, FamilyId::U67) && !in_family(bases, FamilyId::U15);
    case FamilyId::U910minus18:
      return in_family(bases, FamilyId::U910) && !in_family(bases, FamilyId::U18);
    default: {
      for (FamilyId b : constituent_bases(f))
        if (bases.count(b)) return true;
      return false;
    }
  }
}

const char *sign_name(Sign s) {
  switch (s) {
    case Sign::Plus: return "+";
    case Sign::Minus: return "-";
    case Sign::None: return "none";
  }
  return "?";
}

CommutationSign commutation_sign(const CMat &u, const CMat &w) {
  if (u.rows() != 3 || u.cols() != 3 || w.rows() != 3 || w.cols() != 3)
    throw std::invalid_argument("commutation_sign expects 3x3 matrices");
  double scale = w.frobenius_norm();
  if (scale < 1e-300) throw std::invalid_argument("zero residue operator");
  CMat wn = w * Complex(1.0 / scale, 0);
  CMat uw = u * wn, wu = wn * u;
  double commute_res = (uw - wu).frobenius_norm();
  double anticommute_res = (uw + wu).frobenius_norm();
  CommutationSign out;
  out.residual = std::min(commute_res, anticommute_res);
  if (commute_res < kTol)
    out.sign = Sign::Plus;
  else if (anticommute_res < kTol)
    out.sign = Sign::Minus;
  else
    out.sign = Sign::None;
  return out;
}

int commutant_dimension(const CMat &w, Sign which, double tol) {
  if (w.rows() != 3 || w.cols() != 3)
    throw std::invalid_argument("commutant_dimension expects a 3x3 matrix");
  if (which == Sign::None) throw std::invalid_argument("pick Plus or Minus");
  double scale = w.frobenius_norm();
  if (scale < 1e-300) throw std::invalid_argument("zero residue operator");
  CMat wn = w * Complex(1.0 / scale, 0);
  // vec is column-major: vec(M W) = (W^T (x) I) vec M, vec(W M) = (I (x) W) vec M.
  CMat wt(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) wt(r, c) = wn(c, r);
  CMat lhs = kron(wt, CMat::identity(3));
  CMat rhs = kron(CMat::identity(3), wn);
  CMat op = (which == Sign::Plus) ? (lhs - rhs) : (lhs + rhs);
  return null_space_dimension(op, tol);
}

Sign family_sign(FamilyId base, const CMat &w_diag) {
  if (!is_base_family(base)) throw std::invalid_argument("family_sign takes a base family");
  CVec w = w_diag.diag();
  double scale = 0;
  for (const Complex &z : w) scale = std::max(scale, std::abs(z));
  if (scale < 1e-300) return Sign::None;
  bool plus = true, minus = true;
  for (auto [j, k] : pattern(base)) {
    Complex wj = w[static_cast<std::size_t>(j)], wk = w[static_cast<std::size_t>(k)];
    if (std::abs(wj - wk) > kTol * scale) plus = false;
    if (std::abs(wj + wk) > kTol * scale) minus = false;
  }
  if (plus) return Sign::Plus;
  if (minus) return Sign::Minus;
  return Sign::None;
}

bool family_guarantees(FamilyId declared, const CMat &w_diag) {
  for (FamilyId b : constituent_bases(declared))
    if (family_sign(b, w_diag) == Sign::None) return false;
  return true;
}

Rational predicted_probability(const std::set<FamilyId> &memberships, CaseId preset) {
  WOperators w = preset_basis(preset).w;
  bool grant1 = false, grant2 = false;
  for (FamilyId f : memberships) {
    if (family_guarantees(f, w.w1)) grant1 = true;
    if (family_guarantees(f, w.w2)) grant2 = true;
  }
  return Rational(1 + (grant1 ? 1 : 0) + (grant2 ? 1 : 0), 3);
}

Unitary random_unitary(std::mt19937_64 &rng) {
  // Ginibre + modified Gram-Schmidt; diagonal phases fixed by the R factor.
  CMat g(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) g(r, c) = gaussian_pair(rng);
  std::vector<CVec> cols(3, CVec(3));
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t r = 0; r < 3; ++r) cols[c][r] = g(r, c);
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex proj = inner(cols[prev], cols[c]);
      for (std::size_t r = 0; r < 3; ++r) cols[c][r] -= proj * cols[prev][r];
    }
    double n = norm(cols[c]);
    if (n < 1e-12) throw std::runtime_error("degenerate random draw");
    for (std::size_t r = 0; r < 3; ++r) cols[c][r] /= n;
  }
  CMat u(3, 3);
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t r = 0; r < 3; ++r) u(r, c) = cols[c][r];
  return Unitary(std::move(u));
}

Unitary generic_unitary(std::mt19937_64 &rng, double min_entry) {
  for (int tries = 0; tries < 10000; ++tries) {
    Unitary u = random_unitary(rng);
    double smallest = 1e300;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c)
        smallest = std::min(smallest, std::abs(u.mat()(r, c)));
    if (smallest >= min_entry) return u;
  }
  throw std::runtime_error("generic unitary sampling failed to converge");
}

std::array<Complex, 3> random_chi(std::mt19937_64 &rng, double min_entry) {
  for (int tries = 0; tries < 10000; ++tries) {
    std::array<Complex, 3> chi{gaussian_pair(rng), gaussian_pair(rng), gaussian_pair(rng)};
    double n = std::sqrt(std::norm(chi[0]) + std::norm(chi[1]) + std::norm(chi[2]));
    if (n < 1e-12) continue;
    for (Complex &z : chi) z /= n;
    double smallest = std::min({std::abs(chi[0]), std::abs(chi[1]), std::abs(chi[2])});
    if (smallest >= min_entry) return chi;
  }
  throw std::runtime_error("chi sampling failed to converge");
}

FamilyParams random_family_params(FamilyId base, std::mt19937_64 &rng) {
  FamilyParams p;
  std::size_t count = family_param_count(base);
  for (std::size_t i = 0; i < count; ++i) p.mu.push_back(uniform(rng, 0, 2 * kPi));
  return p;
}

Unitary sample_family_random(FamilyId f, std::mt19937_64 &rng) {
  auto pick = [&](std::vector<FamilyId> options) {
    return options[rng() % options.size()];
  };
  auto bounded_block = [&](FamilyId base) {
    // Keep the block angle away from multiples of pi/2 so the sample has a
    // fully mixed block and cannot fall into the diagonal/antidiagonal
    // subfamilies.
    FamilyParams p = random_family_params(base, rng);
    p.mu[4] = uniform(rng, 0.15, kPi / 2 - 0.15);
    return sample_family(base, p);
  };
  switch (f) {
    case FamilyId::U12: return sample_family_random(pick({FamilyId::U1, FamilyId::U2}), rng);
    case FamilyId::U15: return sample_family_random(pick({FamilyId::U1, FamilyId::U5}), rng);
    case FamilyId::U18: return sample_family_random(pick({FamilyId::U1, FamilyId::U8}), rng);
    case FamilyId::U34: return sample_family_random(pick({FamilyId::U3, FamilyId::U4}), rng);
    case FamilyId::U67: return sample_family_random(pick({FamilyId::U6, FamilyId::U7}), rng);
    case FamilyId::U910: return sample_family_random(pick({FamilyId::U9, FamilyId::U10}), rng);
    case FamilyId::U34minus12: return bounded_block(pick({FamilyId::U3, FamilyId::U4}));
    case FamilyId::U67minus15: return bounded_block(pick({FamilyId::U6, FamilyId::U7}));
    case FamilyId::U910minus18: return bounded_block(pick({FamilyId::U9, FamilyId::U10}));
    default:
      return sample_family(f, random_family_params(f, rng));
  }
}

BasisParams random_basis_params(std::mt19937_64 &rng) {
  for (int tries = 0; tries < 10000; ++tries) {
    Complex u = gaussian_pair(rng), v = gaussian_pair(rng);
    double s = std::norm(u) + std::norm(v) + std::norm(u + v);
    if (s < 1e-12) continue;
    double inv = 1.0 / std::sqrt(s);
    return BasisParams::from_xy(u * inv, v * inv);
  }
  throw std::runtime_error("basis parameter sampling failed to converge");
}

}  // namespace qos3
