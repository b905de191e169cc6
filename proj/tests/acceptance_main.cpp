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

// Acceptance suite: runs each reproduction criterion end to end and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//
// Usage: qos3_acceptance [path-to-qos3-cli]
// The CLI path is needed only for the determinism criterion; without it
// that criterion is reported as SKIP and counted as a failure.

#include <array>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qos3/json_io.hpp"
#include "qos3/protocol.hpp"
#include "qos3/report.hpp"

using namespace qos3;

namespace {

int g_failures = 0;

void report(int number, const std::string &name, bool pass, const std::string &detail) {
  std::printf("%s  %2d. %s: %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string run_cli(const std::string &cli, const std::string &args) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

// 1. Scheme 1 determinism: 243 branches, every fidelity 1, total P = 1.
void criterion_1() {
  std::mt19937_64 rng(101);
  bool pass = true;
  double worst_fidelity = 1, worst_total = 0;
  for (int trial = 0; trial < 50 && pass; ++trial) {
    BranchEnumeration e = run_scheme1(random_unitary(rng), random_chi(rng));
    pass = pass && e.branches.size() == 243;
    for (const Branch &b : e.branches) worst_fidelity = std::min(worst_fidelity, b.fidelity);
    worst_total = std::max(worst_total, std::abs(e.total_probability() - 1.0));
    pass = pass && worst_fidelity >= 1 - 1e-9 && worst_total <= 1e-9;
    pass = pass && e.success_fraction() == Rational(1);
  }
  std::ostringstream d;
  d << "50 runs, min branch fidelity " << worst_fidelity << ", |total p - 1| <= "
    << worst_total;
  report(1, "scheme 1 deterministic over random operations", pass, d.str());
}

// 2. Scheme 2, arbitrary operation: exactly 27/81, oracle false off xi0.
void criterion_2() {
  std::mt19937_64 rng(102);
  bool pass = true;
  for (int trial = 0; trial < 50 && pass; ++trial) {
    Unitary u = generic_unitary(rng, 0.05);
    BranchEnumeration e = run_scheme2(u, random_chi(rng, 0.05),
                                      XiSpec::from_preset(CaseId::C1));
    pass = pass && e.branches.size() == 81 && e.success_fraction() == Rational(1, 3);
    int wins = 0;
    for (const Branch &b : e.branches) {
      bool xi0 = b.outcome_path.back().second == 0;
      wins += b.protocol_success ? 1 : 0;
      if (xi0)
        pass = pass && b.protocol_success && b.oracle_success;
      else
        pass = pass && !b.protocol_success && !b.oracle_success;
    }
    pass = pass && wins == 27;
  }
  report(2, "scheme 2 arbitrary operation stays at P = 1/3 (27/81)", pass,
         "50 generic operations, all xi1/xi2 branches fail the oracle");
}

// 3. Tripled classes: P = 1 exactly for the matched (family, basis) pairs.
void criterion_3() {
  std::mt19937_64 rng(103);
  struct Case {
    FamilyId family;
    CaseId preset;
  };
  const std::vector<Case> cases = {
      {FamilyId::U12, CaseId::C1}, {FamilyId::U15, CaseId::C2}, {FamilyId::U18, CaseId::C3},
      {FamilyId::U1, CaseId::C4a}, {FamilyId::U1, CaseId::C4b},
  };
  bool pass = true;
  for (const Case &c : cases)
    for (int trial = 0; trial < 20 && pass; ++trial) {
      Unitary u = sample_family_random(c.family, rng);
      BranchEnumeration e =
          run_scheme2(u, random_chi(rng), XiSpec::from_preset(c.preset), c.family);
      pass = pass && e.success_fraction() == Rational(1);
    }
  report(3, "tripled success classes reach P = 1 exactly", pass,
         "5 family/basis pairs x 20 samples");
}

// 4. Doubled classes: P = 2/3 exactly.
void criterion_4() {
  std::mt19937_64 rng(104);
  struct Case {
    FamilyId family;
    CaseId preset;
  };
  const std::vector<Case> cases = {
      {FamilyId::U34minus12, CaseId::C1},
      {FamilyId::U67minus15, CaseId::C2},
      {FamilyId::U910minus18, CaseId::C3},
  };
  bool pass = true;
  for (const Case &c : cases)
    for (int trial = 0; trial < 20 && pass; ++trial) {
      Unitary u = sample_family_random(c.family, rng);
      BranchEnumeration e =
          run_scheme2(u, random_chi(rng), XiSpec::from_preset(c.preset), c.family);
      pass = pass && e.success_fraction() == Rational(2, 3);
    }
  report(4, "doubled success classes reach P = 2/3 exactly", pass,
         "3 family/basis pairs x 20 samples");
}

// 5. Comparison-table reproduction with exact rationals.
void criterion_5(const std::string &cli) {
  std::vector<TableRow> rows = compute_table(105);
  bool pass = rows.size() == 8 && table_all_pass(rows);
  const std::array<Rational, 8> want_p = {Rational(1),    Rational(1, 3), Rational(2, 3),
                                          Rational(2, 3), Rational(2, 3), Rational(1),
                                          Rational(1),    Rational(1)};
  const std::array<Rational, 8> want_eta = {Rational(1, 10), Rational(1, 24), Rational(1, 12),
                                            Rational(1, 12), Rational(1, 12), Rational(1, 8),
                                            Rational(1, 8),  Rational(1, 8)};
  for (std::size_t i = 0; i < rows.size() && pass; ++i) {
    pass = rows[i].p == want_p[i] && rows[i].eta == want_eta[i];
    pass = pass && rows[i].channel_qutrits == (rows[i].scheme == Scheme::S1 ? 5 : 4);
    pass = pass && rows[i].classical_trits == (rows[i].scheme == Scheme::S1 ? 5 : 4);
  }
  std::string detail = "8 rows recomputed from seeded runs";
  if (!cli.empty()) {
    std::string out = run_cli(cli, "table1 --seed 200");
    bool cli_ok = out.find("all rows PASS") != std::string::npos;
    pass = pass && cli_ok;
    detail += cli_ok ? "; CLI table1 exit confirms" : "; CLI table1 mismatch";
  }
  report(5, "comparison table rows all reproduce", pass, detail);
}

// 6. Commutant dimensions from the vectorized null-space oracle.
void criterion_6() {
  struct Expect {
    CaseId preset;
    int w_index;
    int plus_dim;
    int minus_dim;
  };
  const std::vector<Expect> expectations = {
      {CaseId::C1, 1, 3, 3}, {CaseId::C1, 2, 5, 0}, {CaseId::C2, 1, 3, 3},
      {CaseId::C2, 2, 5, 0}, {CaseId::C3, 1, 3, 3}, {CaseId::C3, 2, 5, 0},
  };
  bool pass = true;
  std::ostringstream d;
  for (const Expect &e : expectations) {
    WOperators w = w_operators(preset_params(e.preset));
    const CMat &m = e.w_index == 1 ? w.w1 : w.w2;
    int plus = commutant_dimension(m, Sign::Plus);
    int minus = commutant_dimension(m, Sign::Minus);
    pass = pass && plus == e.plus_dim && minus == e.minus_dim;
    d << case_name(e.preset) << ".W" << e.w_index << ":+" << plus << "/-" << minus << " ";
  }
  report(6, "commutant dimensions (nonexistence claims included)", pass, d.str());
}

// 7. Inclusion claims under the structural classifier.
void criterion_7() {
  std::mt19937_64 rng(107);
  struct Inclusion {
    FamilyId sub;
    FamilyId super;
  };
  bool pass = true;
  for (const Inclusion &inc : {Inclusion{FamilyId::U12, FamilyId::U34},
                               Inclusion{FamilyId::U15, FamilyId::U67},
                               Inclusion{FamilyId::U18, FamilyId::U910}})
    for (int trial = 0; trial < 200 && pass; ++trial) {
      std::set<FamilyId> members = classify(sample_family_random(inc.sub, rng));
      pass = pass && in_family(members, inc.sub) && in_family(members, inc.super);
    }
  report(7, "union inclusions hold over 200 samples each", pass,
         "U12 in U34, U15 in U67, U18 in U910");
}

// 8. Basis construction property and the residue decomposition identity.
void criterion_8() {
  std::mt19937_64 rng(108);
  bool pass = true;
  double worst_ortho = 0;
  for (int trial = 0; trial < 1000 && pass; ++trial) {
    MeasurementBasis b = xi_basis(random_basis_params(rng));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Complex g = inner(b.vectors[i], b.vectors[j]);
        double err = std::abs(g - (i == j ? Complex(1, 0) : Complex(0, 0)));
        worst_ortho = std::max(worst_ortho, err);
      }
    pass = pass && worst_ortho <= 1e-9;
  }

  double worst_residual = 0;
  for (int trial = 0; trial < 100 && pass; ++trial) {
    std::array<Complex, 3> chi = random_chi(rng);
    Unitary u = random_unitary(rng);
    BasisParams p = random_basis_params(rng);
    MeasurementBasis b = xi_basis(p);
    WOperators w = w_operators(p);
    CVec chi_vec(chi.begin(), chi.end());
    CVec diag(9, Complex(0, 0));
    diag[0] = chi[0];
    diag[4] = chi[1];
    diag[8] = chi[2];
    StateVector j = apply_unitary(StateVector({"c", "b'"}, diag), u, {"c"});
    CVec rebuilt(9, Complex(0, 0));
    const double inv_s3 = 1.0 / std::sqrt(3.0);
    for (int k = 0; k < 3; ++k) {
      CVec residue = k == 0 ? chi_vec : (k == 1 ? w.w1 * chi_vec : w.w2 * chi_vec);
      CVec on_c = u.mat() * residue;
      for (std::size_t c = 0; c < 3; ++c)
        for (std::size_t bp = 0; bp < 3; ++bp)
          rebuilt[3 * c + bp] += inv_s3 * on_c[c] * b.vectors[static_cast<std::size_t>(k)][bp];
    }
    for (std::size_t i = 0; i < 9; ++i)
      worst_residual = std::max(worst_residual, std::abs(rebuilt[i] - j.amps()[i]));
    pass = pass && worst_residual <= 1e-9;
  }
  std::ostringstream d;
  d << "1000 bases orthonormal (worst " << worst_ortho << "), 100 decompositions (worst "
    << worst_residual << ")";
  report(8, "xi-basis construction and residue decomposition", pass, d.str());
}

// 9. Permutation symmetry between the case structures.
void criterion_9() {
  auto proportional = [](const CMat &a, const CMat &b) {
    Complex ratio(0, 0);
    double best = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          ratio = b(i, j) / a(i, j);
        }
    return (a * ratio - b).frobenius_norm() < 1e-9;
  };
  auto perm = [](int p0, int p1, int p2) {
    CMat m(3, 3);
    m(static_cast<std::size_t>(p0), 0) = 1;
    m(static_cast<std::size_t>(p1), 1) = 1;
    m(static_cast<std::size_t>(p2), 2) = 1;
    return m;
  };
  WOperators c1 = w_operators(preset_params(CaseId::C1));
  WOperators c2 = w_operators(preset_params(CaseId::C2));
  WOperators c3 = w_operators(preset_params(CaseId::C3));
  CMat p01 = perm(1, 0, 2), p12 = perm(0, 2, 1), p02 = perm(2, 1, 0);
  bool pass = proportional(p01 * c1.w1 * p01, c2.w1) && proportional(p01 * c1.w2 * p01, c2.w2) &&
              proportional(p12 * c2.w1 * p12, c3.w1) && proportional(p12 * c2.w2 * p12, c3.w2) &&
              proportional(p02 * c1.w1 * p02, c3.w1) && proportional(p02 * c1.w2 * p02, c3.w2);
  report(9, "0<->1 / 1<->2 / 0<->2 swaps map the case structures onto each other", pass,
         "all six residue operators map up to scalar");
}

// 10. Determinism: two CLI runs with one seed are byte-identical.
void criterion_10(const std::string &cli) {
  if (cli.empty()) {
    report(10, "CLI determinism", false, "SKIP: no CLI path supplied");
    return;
  }
  bool pass = true;
  for (const std::string &args :
       {std::string("simulate --scheme s1 --u random --chi random --seed 7"),
        std::string("simulate --scheme s2 --u random --chi random --basis c1 --seed 7 "
                    "--output json"),
        std::string("table1 --seed 7"), std::string("bases")}) {
    std::string a = run_cli(cli, args);
    std::string b = run_cli(cli, args);
    pass = pass && !a.empty() && a == b;
  }
  // Spot-check the expected values through the CLI surface as well.
  std::string s1_out = run_cli(cli, "simulate --scheme s1 --u random --chi random --seed 7");
  pass = pass && s1_out.find("P = 243/243 = 1") != std::string::npos &&
         s1_out.find("eta=1/10") != std::string::npos;
  std::string s2_out = run_cli(cli, "simulate --scheme s2 --u random --chi random "
                                    "--basis c1 --seed 7");
  pass = pass && s2_out.find("P = 27/81 = 1/3") != std::string::npos &&
         s2_out.find("eta=1/24") != std::string::npos;
  std::string declared_out = run_cli(
      cli, "simulate --scheme s2 --u family:U1:0.3,1.1,2.0 --basis c1 --declared u12");
  pass = pass && declared_out.find("P = 81/81 = 1") != std::string::npos &&
         declared_out.find("eta=1/8") != std::string::npos;
  report(10, "CLI output is byte-identical for a fixed seed", pass,
         "simulate (human+json), table1, bases; expected P values appear verbatim");
}

}  // namespace

int main(int argc, char **argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5(cli);
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10(cli);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
