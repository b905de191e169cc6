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

#include "qos3/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace qos3 {

namespace {

constexpr double kPi = std::numbers::pi;

const char *kInput = "b''";
const char *kAlicePair = "a'";
const char *kBobPair = "b'";
const char *kGhzA = "a";
const char *kGhzB = "b";
const char *kGhzC = "c";

StateVector make_chi(const std::array<Complex, 3> &chi) {
  return StateVector::single(kInput, chi);
}

StateVector make_target(const Unitary &u, const std::array<Complex, 3> &chi) {
  CVec amps = u.mat() * CVec(chi.begin(), chi.end());
  return StateVector({kGhzC}, std::move(amps));
}

/// Mutable protocol context carried down the branch tree.
struct Ctx {
  Scheme scheme;
  StateVector state;
  double probability = 1.0;
  std::vector<std::pair<std::string, int>> path;
  std::vector<ClassicalMessage> messages;
  std::vector<OpRecord> ops;

  Ctx(Scheme s, StateVector st) : scheme(s), state(std::move(st)) {}

  void check_owned(PartyName party, const std::vector<std::string> &targets) const {
    std::vector<std::string> owned = owned_labels(scheme, party);
    for (const std::string &t : targets) {
      if (std::find(owned.begin(), owned.end(), t) == owned.end())
        throw std::logic_error(std::string("party locality violated: ") + party_name(party) +
                               " does not own qutrit '" + t + "'");
    }
  }

  void gate(PartyName party, const std::string &name, const Unitary &u,
            const std::vector<std::string> &targets) {
    check_owned(party, targets);
    state = apply_unitary(state, u, targets);
    ops.push_back({OpRecord::Kind::Gate, party, name, targets});
  }

  std::vector<MeasurementRecord> branch_measure(PartyName party, const std::string &name,
                                                const std::vector<std::string> &targets,
                                                const MeasurementBasis &basis) {
    check_owned(party, targets);
    ops.push_back({OpRecord::Kind::Measurement, party, name, targets});
    return measure(state, targets, basis);
  }

  Ctx descend(const MeasurementRecord &rec, const std::string &measurement_id) const {
    if (!rec.post_state)
      throw std::logic_error("inner protocol measurement collapsed to zero probability");
    Ctx child = *this;
    child.state = *rec.post_state;
    child.probability *= rec.probability;
    child.path.emplace_back(measurement_id, rec.outcome_index);
    return child;
  }

  void send(PartyName from, std::vector<PartyName> to, std::vector<int> trits,
            ClassicalMessage::Meaning meaning) {
    messages.push_back({from, std::move(to), std::move(trits), meaning});
  }
};

Unitary phase_twist(int l) {
  // diag(1, w^l, w^2l) with w = e^{2 pi i / 3}; undoes a Fourier-outcome twist.
  CVec d(3);
  for (int j = 0; j < 3; ++j) d[static_cast<std::size_t>(j)] =
      std::polar(1.0, 2.0 * kPi * l * j / 3.0);
  return Unitary(CMat::diagonal(d));
}

}  // namespace

const char *scheme_name(Scheme s) { return s == Scheme::S1 ? "s1" : "s2"; }

const char *party_name(PartyName p) {
  switch (p) {
    case PartyName::Alice: return "alice";
    case PartyName::Bob: return "bob";
    case PartyName::Charlie: return "charlie";
  }
  return "?";
}

std::vector<std::string> owned_labels(Scheme s, PartyName p) {
  switch (p) {
    case PartyName::Alice: return {kAlicePair, kGhzA};
    case PartyName::Charlie: return {kGhzC};
    case PartyName::Bob:
      if (s == Scheme::S1) return {kInput, kBobPair, kGhzB};
      return {kInput, kBobPair};
  }
  return {};
}

XiSpec XiSpec::from_preset(CaseId c) {
  XiSpec s;
  s.preset = c;
  return s;
}

XiSpec XiSpec::from_params(BasisParams p) {
  XiSpec s;
  s.params = std::move(p);
  return s;
}

BasisParams XiSpec::resolve() const {
  if (preset) return preset_params(*preset);
  if (params) return *params;
  throw std::invalid_argument("xi basis spec is empty");
}

int BranchEnumeration::channel_qutrits() const {
  int count = 0;
  for (const ChannelRecord &c : channels) count += static_cast<int>(c.labels.size());
  return count;
}

Rational BranchEnumeration::success_fraction() const {
  std::int64_t wins = 0;
  for (const Branch &b : branches) wins += b.protocol_success ? 1 : 0;
  return Rational(wins, static_cast<std::int64_t>(branches.size()));
}

double BranchEnumeration::born_success_mass() const {
  double s = 0;
  for (const Branch &b : branches)
    if (b.protocol_success) s += b.probability;
  return s;
}

double BranchEnumeration::total_probability() const {
  double s = 0;
  for (const Branch &b : branches) s += b.probability;
  return s;
}

double BranchEnumeration::min_success_fidelity() const {
  double f = 1.0;
  for (const Branch &b : branches)
    if (b.protocol_success) f = std::min(f, b.fidelity);
  return f;
}

bool BranchEnumeration::uniform_probabilities() const {
  double expect = 1.0 / static_cast<double>(branches.size());
  for (const Branch &b : branches)
    if (std::abs(b.probability - expect) > kTol) return false;
  return true;
}

BranchEnumeration run_scheme1(const Unitary &u, const std::array<Complex, 3> &chi) {
  if (u.dim() != 3) throw std::invalid_argument("scheme expects a single-qutrit operation");
  StateVector target = make_target(u, chi);
  MeasurementBasis gbm = gbm_basis();
  MeasurementBasis fourier = fourier_basis();

  BranchEnumeration out{Scheme::S1, u, chi, std::nullopt, std::nullopt, {}, {}};
  out.branches.reserve(243);

  StateVector bell_pair = generalized_bell(BellIndex(0, 0), kAlicePair, kBobPair);
  StateVector ghz = ghz3(kGhzA, kGhzB, kGhzC);
  out.channels.push_back({"GB", bell_pair.labels()});
  out.channels.push_back({"GG", ghz.labels()});
  Ctx root(Scheme::S1, tensor(tensor(make_chi(chi), bell_pair), ghz));

  // Teleport chi from b'' to a' through the shared Bell pair.
  for (const MeasurementRecord &rec1 :
       root.branch_measure(PartyName::Bob, "gbm(b'',b')", {kInput, kBobPair}, gbm)) {
    Ctx c1 = root.descend(rec1, "gbm(b'',b')");
    BellIndex qt(rec1.outcome_index / 3, rec1.outcome_index % 3);
    c1.send(PartyName::Bob, {PartyName::Alice}, {qt.n, qt.m},
            ClassicalMessage::Meaning::BellOutcome);
    c1.gate(PartyName::Alice, "sigma_dagger" + qt.str(), sigma(qt).dagger(), {kAlicePair});
    c1.gate(PartyName::Alice, "U", u, {kAlicePair});

    // Split U|chi> between Bob and Charlie through the GHZ channel.
    for (const MeasurementRecord &rec2 :
         c1.branch_measure(PartyName::Alice, "gbm(a',a)", {kAlicePair, kGhzA}, gbm)) {
      Ctx c2 = c1.descend(rec2, "gbm(a',a)");
      BellIndex split(rec2.outcome_index / 3, rec2.outcome_index % 3);
      c2.send(PartyName::Alice, {PartyName::Bob, PartyName::Charlie}, {split.n, split.m},
              ClassicalMessage::Meaning::BellOutcome);

      for (const MeasurementRecord &rec3 :
           c2.branch_measure(PartyName::Bob, "fourier(b)", {kGhzB}, fourier)) {
        Ctx c3 = c2.descend(rec3, "fourier(b)");
        int l = rec3.outcome_index;
        c3.send(PartyName::Bob, {PartyName::Charlie}, {l},
                ClassicalMessage::Meaning::SingleOutcome);
        Unitary reconstruct = sigma(split).dagger() * phase_twist(l);
        c3.gate(PartyName::Charlie, "reconstruct" + split.str() + ",f" + std::to_string(l),
                reconstruct, {kGhzC});

        Branch br;
        br.outcome_path = c3.path;
        br.probability = c3.probability;
        br.messages = c3.messages;
        br.ops = c3.ops;
        br.final_state = c3.state;
        br.fidelity = fidelity_up_to_phase(c3.state, target);
        br.protocol_success = true;
        br.oracle_success = br.fidelity >= 1.0 - kTol;
        out.branches.push_back(std::move(br));
      }
    }
  }
  return out;
}

BranchEnumeration run_scheme2(const Unitary &u, const std::array<Complex, 3> &chi,
                              const XiSpec &basis, std::optional<FamilyId> declared) {
  if (u.dim() != 3) throw std::invalid_argument("scheme expects a single-qutrit operation");
  BasisParams params = basis.resolve();
  MeasurementBasis xi = xi_basis(params);
  WOperators w = w_operators(params);
  const bool grant1 = declared && family_guarantees(*declared, w.w1);
  const bool grant2 = declared && family_guarantees(*declared, w.w2);
  StateVector target = make_target(u, chi);
  MeasurementBasis gbm = gbm_basis();
  MeasurementBasis comp = computational_basis();

  BranchEnumeration out{Scheme::S2, u, chi, basis.preset, declared, {}, {}};
  out.branches.reserve(81);

  StateVector pair_ab = generalized_bell(BellIndex(0, 0), kAlicePair, kBobPair);
  StateVector pair_ac = generalized_bell(BellIndex(0, 0), kGhzA, kGhzC);
  out.channels.push_back({"GB", pair_ab.labels()});
  out.channels.push_back({"GB", pair_ac.labels()});
  Ctx root(Scheme::S2, tensor(tensor(pair_ab, pair_ac), make_chi(chi)));
  root.gate(PartyName::Bob, "V", v_gate(), {kBobPair, kInput});

  for (const MeasurementRecord &rec1 :
       root.branch_measure(PartyName::Bob, "computational(b'')", {kInput}, comp)) {
    Ctx c1 = root.descend(rec1, "computational(b'')");
    int t = rec1.outcome_index;
    c1.send(PartyName::Bob, {PartyName::Alice, PartyName::Charlie}, {t},
            ClassicalMessage::Meaning::SingleOutcome);
    static const char *kShiftNames[3] = {"shift:I", "shift:S", "shift:T"};
    c1.gate(PartyName::Bob, kShiftNames[t], shift_correction(t), {kBobPair});
    c1.gate(PartyName::Alice, kShiftNames[t], shift_correction(t), {kAlicePair});
    c1.gate(PartyName::Alice, "U", u, {kAlicePair});

    for (const MeasurementRecord &rec2 :
         c1.branch_measure(PartyName::Alice, "gbm(a',a)", {kAlicePair, kGhzA}, gbm)) {
      Ctx c2 = c1.descend(rec2, "gbm(a',a)");
      BellIndex nm(rec2.outcome_index / 3, rec2.outcome_index % 3);
      c2.send(PartyName::Alice, {PartyName::Bob, PartyName::Charlie}, {nm.n, nm.m},
              ClassicalMessage::Meaning::BellOutcome);
      c2.gate(PartyName::Charlie, "sigma_dagger" + nm.str(), sigma(nm).dagger(), {kGhzC});

      std::vector<MeasurementRecord> xi_records =
          c2.branch_measure(PartyName::Bob, "xi(b')", {kBobPair}, xi);
      for (const MeasurementRecord &rec3 : xi_records) {
        int k = rec3.outcome_index;
        Branch br;
        br.messages = c2.messages;
        br.messages.push_back({PartyName::Bob, {PartyName::Charlie}, {k},
                               ClassicalMessage::Meaning::SingleOutcome});
        br.outcome_path = c2.path;
        br.outcome_path.emplace_back("xi(b')", k);
        br.ops = c2.ops;
        br.protocol_success = (k == 0) || (k == 1 && grant1) || (k == 2 && grant2);

        const bool correct = (k == 1 && grant1) || (k == 2 && grant2);
        std::optional<StateVector> final_state;
        if (rec3.post_state) {
          final_state = rec3.post_state;
          if (correct) {
            Unitary fix = phase_direction_dagger(k == 1 ? w.w1 : w.w2);
            final_state = apply_unitary(*final_state, fix, {kGhzC});
          }
        }
        if (correct)
          br.ops.push_back({OpRecord::Kind::Gate, PartyName::Charlie,
                            "w" + std::to_string(k) + "_direction_dagger", {kGhzC}});
        br.probability = rec3.negligible ? 0.0 : c2.probability * rec3.probability;
        br.final_state = final_state;
        br.fidelity = final_state ? fidelity_up_to_phase(*final_state, target) : 0.0;
        br.oracle_success = br.fidelity >= 1.0 - kTol;
        out.branches.push_back(std::move(br));
      }
    }
  }
  return out;
}

ResourceReport resources(Scheme s, const Rational &p_class) {
  if (s == Scheme::S1) {
    if (p_class != Rational(1))
      throw std::invalid_argument("scheme s1 is deterministic; only P = 1 is valid");
    return ResourceReport{s, 5, 5, Rational(1), Rational(1, 10)};
  }
  if (p_class != Rational(1) && p_class != Rational(1, 3) && p_class != Rational(2, 3))
    throw std::invalid_argument("scheme s2 success classes are 1/3, 2/3 and 1");
  return ResourceReport{s, 4, 4, p_class, p_class / Rational(8)};
}

ResourceReport verify_branch_messages(const BranchEnumeration &e) {
  if (e.branches.empty()) throw std::invalid_argument("empty branch enumeration");
  std::int64_t trits = -1;
  for (const Branch &b : e.branches) {
    std::int64_t count = 0;
    for (const ClassicalMessage &m : b.messages) {
      std::size_t want = m.meaning == ClassicalMessage::Meaning::BellOutcome ? 2 : 1;
      if (m.trits.size() != want)
        throw std::logic_error("message trit count does not match its meaning");
      count += static_cast<std::int64_t>(m.trits.size());
    }
    if (trits < 0) trits = count;
    if (count != trits)
      throw std::logic_error("non-uniform classical message counts across branches");
  }
  ResourceReport expected = resources(e.scheme, e.success_fraction());
  if (expected.channel_qutrits != e.channel_qutrits() ||
      expected.classical_trits != static_cast<int>(trits))
    throw std::logic_error("resource accounting mismatch against the scheme table");
  return ResourceReport{e.scheme, e.channel_qutrits(), static_cast<int>(trits),
                        expected.p, expected.eta};
}

OpCounts count_operations(const BranchEnumeration &e) {
  if (e.branches.empty()) throw std::invalid_argument("empty branch enumeration");
  std::optional<OpCounts> uniform;
  for (const Branch &b : e.branches) {
    OpCounts c;
    std::set<std::pair<std::string, std::string>> so_slots;
    for (const OpRecord &op : b.ops) {
      if (op.kind == OpRecord::Kind::Measurement) {
        if (op.targets.size() == 2)
          ++c.bell_measurements;
        else
          ++c.single_measurements;
      } else if (op.targets.size() == 2) {
        ++c.v_ops;
      } else {
        // Same-party corrections on the same qutrit compose into one
        // operation, so tally by (party, qutrit) slot.
        so_slots.insert({party_name(op.party), op.targets[0]});
      }
    }
    c.single_qutrit_ops = static_cast<int>(so_slots.size());
    if (!uniform) uniform = c;
    if (uniform->bell_measurements != c.bell_measurements ||
        uniform->single_measurements != c.single_measurements ||
        uniform->single_qutrit_ops != c.single_qutrit_ops || uniform->v_ops != c.v_ops)
      throw std::logic_error("non-uniform operation counts across branches");
  }
  return *uniform;
}

std::string op_summary(Scheme s, const OpCounts &c) {
  std::string out;
  if (s == Scheme::S2 && c.v_ops > 0) out += "V, ";
  out += std::to_string(c.bell_measurements) + (c.bell_measurements == 1 ? " GM, " : " GMs, ");
  out += std::to_string(c.single_measurements) + (c.single_measurements == 1 ? " SM, " : " SMs, ");
  out += std::to_string(c.single_qutrit_ops) + (c.single_qutrit_ops == 1 ? " SO" : " SOs");
  return out;
}

}  // namespace qos3
