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

#ifndef QOS3_PROTOCOL_HPP
#define QOS3_PROTOCOL_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qos3/channels.hpp"
#include "qos3/families.hpp"
#include "qos3/rational.hpp"
#include "qos3/state.hpp"

namespace qos3 {

enum class Scheme { S1, S2 };
enum class PartyName { Alice, Bob, Charlie };

const char *scheme_name(Scheme s);
const char *party_name(PartyName p);

/// Qutrit labels owned by each party under each scheme. Every gate and
/// measurement in a branch trace touches only its acting party's labels.
std::vector<std::string> owned_labels(Scheme s, PartyName p);

struct ClassicalMessage {
  enum class Meaning { SingleOutcome, BellOutcome };
  PartyName sender;
  std::vector<PartyName> receivers;
  std::vector<int> trits;  // 1 trit for SingleOutcome, 2 for BellOutcome
  Meaning meaning;
};

/// One gate application or measurement in a branch trace.
struct OpRecord {
  enum class Kind { Gate, Measurement };
  Kind kind;
  PartyName party;
  std::string name;
  std::vector<std::string> targets;
};

/// One fully resolved measurement history of a protocol run.
///
/// protocol_success follows the scheme's classical decision rule (for S2:
/// the xi0 outcome always succeeds; xi1/xi2 succeed exactly when the
/// declared family guarantees +-commutation with the matching residue
/// operator). oracle_success independently checks that the reconstructed
/// qutrit actually equals U|chi> up to global phase after the applied
/// correction; the two agree except where a residue operator is not
/// proportional to a unitary, in which case the decision rule is
/// reproduced and the oracle records the physical shortfall.
struct Branch {
  std::vector<std::pair<std::string, int>> outcome_path;
  double probability = 0;
  std::vector<ClassicalMessage> messages;
  std::vector<OpRecord> ops;
  std::optional<StateVector> final_state;  // absent on negligible branches
  double fidelity = 0;                     // |<final | U chi>|
  bool protocol_success = false;
  bool oracle_success = false;
};

/// Which xi measurement basis scheme S2 runs with.
struct XiSpec {
  std::optional<CaseId> preset;
  std::optional<BasisParams> params;

  static XiSpec from_preset(CaseId c);
  static XiSpec from_params(BasisParams p);
  BasisParams resolve() const;
};

/// One entangled channel state consumed by a run (the input qutrit carrying
/// chi is not a channel and is not listed).
struct ChannelRecord {
  std::string kind;  // "GB" or "GG"
  std::vector<std::string> labels;
};

struct BranchEnumeration {
  Scheme scheme;
  Unitary u;
  std::array<Complex, 3> chi;
  std::optional<CaseId> preset;            // S2 only
  std::optional<FamilyId> declared;        // S2 only
  std::vector<ChannelRecord> channels;
  std::vector<Branch> branches;

  /// Q_t: qutrits across the recorded channel states.
  int channel_qutrits() const;

  /// Exact rational fraction of branches whose decision rule succeeds.
  Rational success_fraction() const;
  /// Born-weighted probability mass on decision-rule successes.
  double born_success_mass() const;
  double total_probability() const;
  /// Smallest fidelity across decision-rule successful branches.
  double min_success_fidelity() const;
  /// True when all branch probabilities are equal within kTol.
  bool uniform_probabilities() const;
};

/// The universal scheme: teleport chi from b'' to a', apply U, then split
/// U|chi> to Charlie's c through the GHZ channel. 9 x 9 x 3 = 243 branches,
/// all deterministic successes.
BranchEnumeration run_scheme1(const Unitary &u, const std::array<Complex, 3> &chi);

/// The two-Bell-pair scheme with the tunable xi measurement. 3 x 9 x 3 = 81
/// branches; success beyond the xi0 third requires declared knowledge of a
/// family commuting (up to sign) with the residue operators.
BranchEnumeration run_scheme2(const Unitary &u, const std::array<Complex, 3> &chi,
                              const XiSpec &basis,
                              std::optional<FamilyId> declared = std::nullopt);

struct ResourceReport {
  Scheme scheme;
  int channel_qutrits = 0;   // Q_t
  int classical_trits = 0;   // C_t
  Rational p;                // success probability class
  Rational eta;              // P / (Q_t + C_t), exact
};

/// Static resource accounting per scheme and probability class.
/// S1 admits only P = 1; S2 admits P in {1/3, 2/3, 1}.
ResourceReport resources(Scheme s, const Rational &p_class);

/// Recounts trits actually sent per branch (must be uniform) and channel
/// qutrits, and cross-checks them against resources() for the enumeration's
/// own success class.
ResourceReport verify_branch_messages(const BranchEnumeration &e);

/// Operation tally of one protocol run, derived from the branch traces.
/// Consecutive single-qutrit gates by one party on one qutrit count as a
/// single operation (corrections compose).
struct OpCounts {
  int bell_measurements = 0;
  int single_measurements = 0;
  int single_qutrit_ops = 0;
  int v_ops = 0;
};

OpCounts count_operations(const BranchEnumeration &e);
std::string op_summary(Scheme s, const OpCounts &c);

}  // namespace qos3

#endif
