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

#include "qos3/report.hpp"

#include <cmath>
#include <cctype>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace qos3 {

namespace {

std::string fixed12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", v);
  return buf;
}

std::string channel_summary(const std::vector<ChannelRecord> &channels) {
  int bells = 0, ghz = 0;
  for (const ChannelRecord &c : channels) (c.kind == "GG" ? ghz : bells) += 1;
  std::string out;
  if (bells == 1) out += "GB";
  if (bells > 1) out += std::to_string(bells) + " GBs";
  if (ghz > 0) out += std::string(out.empty() ? "" : ", ") + (ghz == 1 ? "GG" : std::to_string(ghz) + " GGs");
  return out;
}

struct RowSpec {
  Scheme scheme;
  const char *op_class;
  FamilyId sample_from;       // ignored for "arbitrary"
  bool arbitrary;
  CaseId preset;              // S2 only
  Rational expected_p;
  Rational expected_eta;
};

}  // namespace

std::string format_complex(Complex z) {
  char buf[80];
  double re = z.real() == 0 ? 0 : z.real();  // normalize -0
  double im = z.imag() == 0 ? 0 : z.imag();
  if (im >= 0)
    std::snprintf(buf, sizeof(buf), "%.9g+%.9gi", re, im);
  else
    std::snprintf(buf, sizeof(buf), "%.9g-%.9gi", re, -im);
  return buf;
}

std::vector<TableRow> compute_table(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<RowSpec> specs = {
      {Scheme::S1, "arbitrary", FamilyId::U1, true, CaseId::C1, Rational(1), Rational(1, 10)},
      {Scheme::S2, "arbitrary", FamilyId::U1, true, CaseId::C1, Rational(1, 3), Rational(1, 24)},
      {Scheme::S2, "U34\\12", FamilyId::U34minus12, false, CaseId::C1, Rational(2, 3),
       Rational(1, 12)},
      {Scheme::S2, "U67\\15", FamilyId::U67minus15, false, CaseId::C2, Rational(2, 3),
       Rational(1, 12)},
      {Scheme::S2, "U910\\18", FamilyId::U910minus18, false, CaseId::C3, Rational(2, 3),
       Rational(1, 12)},
      {Scheme::S2, "U12", FamilyId::U12, false, CaseId::C1, Rational(1), Rational(1, 8)},
      {Scheme::S2, "U15", FamilyId::U15, false, CaseId::C2, Rational(1), Rational(1, 8)},
      {Scheme::S2, "U18", FamilyId::U18, false, CaseId::C3, Rational(1), Rational(1, 8)},
  };

  std::vector<TableRow> rows;
  for (const RowSpec &spec : specs) {
    Unitary u = spec.arbitrary ? generic_unitary(rng) : sample_family_random(spec.sample_from, rng);
    std::array<Complex, 3> chi = random_chi(rng);
    BranchEnumeration e =
        spec.scheme == Scheme::S1
            ? run_scheme1(u, chi)
            : run_scheme2(u, chi, XiSpec::from_preset(spec.preset),
                          spec.arbitrary ? std::nullopt : std::optional<FamilyId>(spec.sample_from));
    ResourceReport rr = verify_branch_messages(e);
    OpCounts counts = count_operations(e);

    TableRow row;
    row.scheme = spec.scheme;
    row.op_class = spec.op_class;
    row.quantum_channel = channel_summary(e.channels);
    row.operations = op_summary(spec.scheme, counts);
    row.channel_qutrits = rr.channel_qutrits;
    row.classical_trits = rr.classical_trits;
    row.p = rr.p;
    row.eta = rr.eta;
    row.expected_p = spec.expected_p;
    row.expected_eta = spec.expected_eta;
    int want_qt = spec.scheme == Scheme::S1 ? 5 : 4;
    int want_ct = spec.scheme == Scheme::S1 ? 5 : 4;
    row.pass = row.p == row.expected_p && row.eta == row.expected_eta &&
               row.channel_qutrits == want_qt && row.classical_trits == want_ct;
    rows.push_back(std::move(row));
  }
  return rows;
}

bool table_all_pass(const std::vector<TableRow> &rows) {
  for (const TableRow &r : rows)
    if (!r.pass) return false;
  return true;
}

std::string render_table(const std::vector<TableRow> &rows) {
  std::ostringstream out;
  out << "S   operation   QRC      NO                     CRC       P     eta    check\n";
  for (const TableRow &r : rows) {
    std::ostringstream line;
    line << std::left << std::setw(4) << scheme_name(r.scheme) << std::setw(12) << r.op_class
         << std::setw(9) << r.quantum_channel << std::setw(23) << r.operations
         << std::setw(10) << (std::to_string(r.classical_trits) + " ctrits")
         << std::setw(6) << r.p.str() << std::setw(7) << r.eta.str()
         << (r.pass ? "PASS" : "FAIL");
    out << line.str() << "\n";
  }
  out << (table_all_pass(rows) ? "all rows PASS\n" : "TABLE MISMATCH\n");
  return out.str();
}

ClassifyReport compute_classify(const Unitary &u) {
  ClassifyReport r{u, classify(u), {}, {}};
  for (CaseId c : {CaseId::C1, CaseId::C2, CaseId::C3, CaseId::C4a, CaseId::C4b}) {
    WOperators w = preset_basis(c).w;
    CommutationSign s1 = commutation_sign(u.mat(), w.w1);
    CommutationSign s2 = commutation_sign(u.mat(), w.w2);
    r.signs.push_back({std::string(case_name(c)) + ".W1", s1.sign, s1.residual});
    r.signs.push_back({std::string(case_name(c)) + ".W2", s2.sign, s2.residual});
    r.cases.push_back({c, predicted_probability(r.memberships, c)});
  }
  return r;
}

std::string render_classify(const ClassifyReport &r) {
  std::ostringstream out;
  out << "operation:\n";
  for (std::size_t i = 0; i < 3; ++i) {
    out << "  ";
    for (std::size_t j = 0; j < 3; ++j) out << std::setw(28) << format_complex(r.u.mat()(i, j));
    out << "\n";
  }
  out << "memberships: ";
  if (r.memberships.empty()) out << "(none)";
  bool first = true;
  for (FamilyId f : r.memberships) {
    if (!first) out << ", ";
    out << family_name(f);
    first = false;
  }
  out << "\n";
  out << "commutation signs against preset residue operators:\n";
  for (const ClassifyReport::SignEntry &s : r.signs)
    out << "  " << std::left << std::setw(8) << s.w_name << std::setw(6) << sign_name(s.sign)
        << "residual " << fixed12(s.residual) << "\n";
  out << "predicted success probability per preset basis:\n";
  for (const ClassifyReport::CaseEntry &c : r.cases)
    out << "  " << std::left << std::setw(5) << case_name(c.preset) << c.p.str() << "\n";
  return out.str();
}

std::string render_enumeration(const BranchEnumeration &e) {
  std::ostringstream out;
  out << "scheme " << scheme_name(e.scheme);
  if (e.preset) out << "  basis " << case_name(*e.preset);
  if (e.declared) out << "  declared " << family_name(*e.declared);
  out << "\n";
  out << "U =\n";
  for (std::size_t i = 0; i < 3; ++i) {
    out << "  ";
    for (std::size_t j = 0; j < 3; ++j) out << std::setw(28) << format_complex(e.u.mat()(i, j));
    out << "\n";
  }
  out << "chi = (" << format_complex(e.chi[0]) << ", " << format_complex(e.chi[1]) << ", "
      << format_complex(e.chi[2]) << ")\n";
  out << "branches: " << e.branches.size() << "\n";
  out << "  #    outcome path                                         p               "
         "messages                 rule  oracle  fidelity\n";
  for (std::size_t i = 0; i < e.branches.size(); ++i) {
    const Branch &b = e.branches[i];
    std::ostringstream path;
    for (std::size_t k = 0; k < b.outcome_path.size(); ++k) {
      if (k) path << " ";
      path << b.outcome_path[k].first << "=" << b.outcome_path[k].second;
    }
    std::ostringstream msgs;
    for (std::size_t k = 0; k < b.messages.size(); ++k) {
      const ClassicalMessage &msg = b.messages[k];
      if (k) msgs << " ";
      msgs << static_cast<char>(std::toupper(party_name(msg.sender)[0])) << ">";
      for (PartyName to : msg.receivers)
        msgs << static_cast<char>(std::toupper(party_name(to)[0]));
      msgs << ":";
      for (std::size_t t = 0; t < msg.trits.size(); ++t) {
        if (t) msgs << ",";
        msgs << msg.trits[t];
      }
    }
    out << "  " << std::left << std::setw(5) << i << std::setw(53) << path.str()
        << std::setw(16) << fixed12(b.probability) << std::setw(25) << msgs.str()
        << std::setw(6) << (b.protocol_success ? "ok" : "-")
        << std::setw(8) << (b.oracle_success ? "ok" : "-") << fixed12(b.fidelity) << "\n";
  }

  Rational p = e.success_fraction();
  std::int64_t wins = 0;
  for (const Branch &b : e.branches) wins += b.protocol_success ? 1 : 0;
  out << "success probability P = " << wins << "/" << e.branches.size() << " = " << p.str()
      << " (decision rule)\n";
  if (e.uniform_probabilities()) {
    out << "branch probabilities: uniform 1/" << e.branches.size() << "\n";
  } else {
    out << "branch probabilities: non-uniform; Born mass on successful branches = "
        << fixed12(e.born_success_mass()) << "\n";
  }
  out << "min fidelity over successful branches = " << fixed12(e.min_success_fidelity())
      << "\n";
  ResourceReport rr = verify_branch_messages(e);
  out << "resources: Q_t=" << rr.channel_qutrits << " C_t=" << rr.classical_trits
      << " P=" << rr.p.str() << " eta=" << rr.eta.str() << "\n";
  out << "necessary operations: " << op_summary(e.scheme, count_operations(e)) << "\n";
  return out.str();
}

std::string render_bases() {
  std::ostringstream out;
  for (CaseId c : {CaseId::C1, CaseId::C2, CaseId::C3, CaseId::C4a, CaseId::C4b}) {
    PresetBasis pb = preset_basis(c);
    out << "preset " << case_name(c) << "\n";
    for (std::size_t k = 0; k < 3; ++k) {
      out << "  xi" << k << " = (";
      for (std::size_t j = 0; j < 3; ++j) {
        if (j) out << ", ";
        out << format_complex(pb.basis.vectors[k][j]);
      }
      out << ")\n";
    }
    for (int k = 1; k <= 2; ++k) {
      const CMat &w = k == 1 ? pb.w.w1 : pb.w.w2;
      out << "  W" << k << " = diag(";
      for (std::size_t j = 0; j < 3; ++j) {
        if (j) out << ", ";
        out << format_complex(w(j, j));
      }
      out << ")";
      out << (unitarity_residual(w) <= kTol ? "  [unitary]" : "  [not unitary]") << "\n";
    }
  }
  return out.str();
}

}  // namespace qos3
