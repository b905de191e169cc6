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

#ifndef QOS3_REPORT_HPP
#define QOS3_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qos3/protocol.hpp"

namespace qos3 {

/// One row of the scheme-comparison table, recomputed by actually running
/// the scheme with a representative operation and cross-checking the
/// branch-derived resource counts against the expected values.
struct TableRow {
  Scheme scheme;
  std::string op_class;        // "arbitrary", "U12", "U34\\12", ...
  std::string quantum_channel; // "GB, GG" or "2 GBs"
  std::string operations;      // derived from the branch traces
  int channel_qutrits = 0;
  int classical_trits = 0;
  Rational p;
  Rational eta;
  Rational expected_p;
  Rational expected_eta;
  bool pass = false;
};

/// Recompute all eight comparison rows with seeded representative runs.
std::vector<TableRow> compute_table(std::uint64_t seed);
bool table_all_pass(const std::vector<TableRow> &rows);
std::string render_table(const std::vector<TableRow> &rows);

/// Classification report for one operation: memberships, commutation signs
/// against every preset residue operator, and the predicted success class
/// per preset basis.
struct ClassifyReport {
  Unitary u;
  std::set<FamilyId> memberships;
  struct SignEntry {
    std::string w_name;  // e.g. "c1.W1"
    Sign sign;
    double residual;
  };
  std::vector<SignEntry> signs;
  struct CaseEntry {
    CaseId preset;
    Rational p;
  };
  std::vector<CaseEntry> cases;
};

ClassifyReport compute_classify(const Unitary &u);
std::string render_classify(const ClassifyReport &r);

/// Human-readable rendering of a full enumeration (per-branch table plus
/// success, fidelity and resource summaries).
std::string render_enumeration(const BranchEnumeration &e);

/// Preset-basis listing for the `bases` subcommand.
std::string render_bases();

std::string format_complex(Complex z);

}  // namespace qos3

#endif
