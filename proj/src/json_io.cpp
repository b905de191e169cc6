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

#include "qos3/json_io.hpp"

#include <json.hpp>

namespace qos3 {

namespace {

using nlohmann::json;

json complex_to_json(const Complex &z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const CMat &m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vec_to_json(const CVec &v) {
  json out = json::array();
  for (const Complex &z : v) out.push_back(complex_to_json(z));
  return out;
}

json rational_to_json(const Rational &r) {
  return json{{"num", r.num}, {"den", r.den}};
}

json message_to_json(const ClassicalMessage &m) {
  json to = json::array();
  for (PartyName p : m.receivers) to.push_back(party_name(p));
  return json{
      {"from", party_name(m.sender)},
      {"to", std::move(to)},
      {"trits", m.trits},
      {"meaning",
       m.meaning == ClassicalMessage::Meaning::BellOutcome ? "bell_outcome" : "single_outcome"},
  };
}

json op_to_json(const OpRecord &op) {
  return json{
      {"kind", op.kind == OpRecord::Kind::Gate ? "gate" : "measurement"},
      {"party", party_name(op.party)},
      {"name", op.name},
      {"targets", op.targets},
  };
}

json branch_to_json(const Branch &b) {
  json path = json::array();
  for (const auto &[id, outcome] : b.outcome_path)
    path.push_back(json::array({id, outcome}));
  json messages = json::array();
  for (const ClassicalMessage &m : b.messages) messages.push_back(message_to_json(m));
  json ops = json::array();
  for (const OpRecord &op : b.ops) ops.push_back(op_to_json(op));
  return json{
      {"path", std::move(path)},
      {"probability", b.probability},
      {"messages", std::move(messages)},
      {"ops", std::move(ops)},
      {"final_state", b.final_state ? vec_to_json(b.final_state->amps()) : json()},
      {"fidelity", b.fidelity},
      {"protocol_success", b.protocol_success},
      {"oracle_success", b.oracle_success},
  };
}

}  // namespace

std::string enumeration_to_json(const BranchEnumeration &e, std::uint64_t seed) {
  ResourceReport rr = verify_branch_messages(e);
  OpCounts counts = count_operations(e);
  json channels = json::array();
  for (const ChannelRecord &c : e.channels)
    channels.push_back(json{{"kind", c.kind}, {"labels", c.labels}});
  json branches = json::array();
  for (const Branch &b : e.branches) branches.push_back(branch_to_json(b));
  json chi = json::array(
      {complex_to_json(e.chi[0]), complex_to_json(e.chi[1]), complex_to_json(e.chi[2])});
  json doc{
      {"scheme", scheme_name(e.scheme)},
      {"seed", seed},
      {"u", matrix_to_json(e.u.mat())},
      {"chi", std::move(chi)},
      {"basis_preset", e.preset ? json(case_name(*e.preset)) : json()},
      {"channels", std::move(channels)},
      {"declared", e.declared ? json(family_name(*e.declared)) : json()},
      {"branches", std::move(branches)},
      {"success_probability", rational_to_json(e.success_fraction())},
      {"born_success_mass", e.born_success_mass()},
      {"total_probability", e.total_probability()},
      {"min_success_fidelity", e.min_success_fidelity()},
      {"uniform_branch_probabilities", e.uniform_probabilities()},
      {"resources",
       json{{"channel_qutrits", rr.channel_qutrits},
            {"classical_trits", rr.classical_trits},
            {"p", rational_to_json(rr.p)},
            {"eta", rational_to_json(rr.eta)}}},
      {"operation_counts",
       json{{"bell_measurements", counts.bell_measurements},
            {"single_measurements", counts.single_measurements},
            {"single_qutrit_ops", counts.single_qutrit_ops},
            {"v_ops", counts.v_ops},
            {"summary", op_summary(e.scheme, counts)}}},
  };
  return doc.dump(2) + "\n";
}

std::string classify_to_json(const ClassifyReport &r) {
  json members = json::array();
  for (FamilyId f : r.memberships) members.push_back(family_name(f));
  json signs = json::array();
  for (const ClassifyReport::SignEntry &s : r.signs)
    signs.push_back(json{{"w", s.w_name}, {"sign", sign_name(s.sign)}, {"residual", s.residual}});
  json cases = json::array();
  for (const ClassifyReport::CaseEntry &c : r.cases)
    cases.push_back(json{{"preset", case_name(c.preset)}, {"p", rational_to_json(c.p)}});
  json doc{
      {"u", matrix_to_json(r.u.mat())},
      {"memberships", std::move(members)},
      {"commutation_signs", std::move(signs)},
      {"predicted_probability", std::move(cases)},
      {"unitarity_residual", unitarity_residual(r.u.mat())},
  };
  return doc.dump(2) + "\n";
}

std::string table_to_json(const std::vector<TableRow> &rows, std::uint64_t seed) {
  json out = json::array();
  for (const TableRow &r : rows) {
    out.push_back(json{
        {"scheme", scheme_name(r.scheme)},
        {"operation_class", r.op_class},
        {"quantum_channel", r.quantum_channel},
        {"operations", r.operations},
        {"channel_qutrits", r.channel_qutrits},
        {"classical_trits", r.classical_trits},
        {"p", rational_to_json(r.p)},
        {"eta", rational_to_json(r.eta)},
        {"expected_p", rational_to_json(r.expected_p)},
        {"expected_eta", rational_to_json(r.expected_eta)},
        {"pass", r.pass},
    });
  }
  json doc{{"seed", seed}, {"rows", std::move(out)}, {"all_pass", table_all_pass(rows)}};
  return doc.dump(2) + "\n";
}

}  // namespace qos3
