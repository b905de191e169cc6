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

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "qos3/json_io.hpp"
#include "qos3/protocol.hpp"
#include "qos3/report.hpp"

namespace {

using namespace qos3;

// Accepts "a", "bi", "a+bi", "a-bi" with locale-free float syntax.
Complex parse_complex(const std::string &token) {
  std::string s;
  for (char c : token)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty complex token");

  auto parse_double = [](const char *first, const char *last, double &out) {
    if (first != last && *first == '+') ++first;  // from_chars rejects a leading '+'
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
  };

  const char *begin = s.data();
  const char *end = s.data() + s.size();
  bool imag_only = s.back() == 'i' || s.back() == 'I';
  if (!imag_only) {
    double re;
    if (!parse_double(begin, end, re))
      throw std::invalid_argument("bad complex token '" + token + "'");
    return Complex(re, 0);
  }
  // Split at the sign that separates the real part from the imaginary part,
  // skipping a leading sign and exponent signs.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size() - 1; i > 0; --i) {
    char c = s[i - 1];
    if ((s[i] == '+' || s[i] == '-') && c != 'e' && c != 'E') {
      split = i;
      break;
    }
  }
  double re = 0, im;
  std::string imag = (split == std::string::npos) ? s.substr(0, s.size() - 1)
                                                  : s.substr(split, s.size() - split - 1);
  if (imag.empty() || imag == "+" || imag == "-") imag += "1";
  if (!parse_double(imag.data(), imag.data() + imag.size(), im))
    throw std::invalid_argument("bad complex token '" + token + "'");
  if (split != std::string::npos) {
    std::string real = s.substr(0, split);
    if (!parse_double(real.data(), real.data() + real.size(), re))
      throw std::invalid_argument("bad complex token '" + token + "'");
  }
  return Complex(re, im);
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

Unitary parse_u(const std::string &spec, std::mt19937_64 &rng) {
  if (spec == "random") return random_unitary(rng);
  if (spec.rfind("family:", 0) == 0) {
    std::vector<std::string> parts = split(spec, ':');
    if (parts.size() != 3) throw std::invalid_argument("expected family:<id>:<mu,...>");
    std::optional<FamilyId> f = parse_family(parts[1]);
    if (!f || !is_base_family(*f))
      throw std::invalid_argument("'" + parts[1] + "' is not a base family");
    FamilyParams p;
    for (const std::string &tok : split(parts[2], ','))
      p.mu.push_back(parse_complex(tok).real());
    return sample_family(*f, p);
  }
  if (spec.rfind("matrix:", 0) == 0) {
    std::vector<std::string> toks = split(spec.substr(7), ',');
    if (toks.size() != 9)
      throw std::invalid_argument("matrix spec needs 9 row-major complex entries");
    CMat m(3, 3);
    for (std::size_t i = 0; i < 9; ++i) m(i / 3, i % 3) = parse_complex(toks[i]);
    return Unitary(std::move(m));  // reports the unitarity residual on failure
  }
  throw std::invalid_argument("u spec must be random, family:..., or matrix:...");
}

std::array<Complex, 3> parse_chi(const std::string &spec, std::mt19937_64 &rng) {
  if (spec == "random") return random_chi(rng);
  std::vector<std::string> toks = split(spec, ',');
  if (toks.size() != 3) throw std::invalid_argument("chi spec needs 3 complex amplitudes");
  std::array<Complex, 3> chi{parse_complex(toks[0]), parse_complex(toks[1]),
                             parse_complex(toks[2])};
  double n = std::sqrt(std::norm(chi[0]) + std::norm(chi[1]) + std::norm(chi[2]));
  if (std::abs(n - 1.0) > kTol)
    throw std::invalid_argument("chi is not normalized (norm " + std::to_string(n) + ")");
  return chi;
}

std::optional<CaseId> parse_case(const std::string &s) {
  if (s == "c1") return CaseId::C1;
  if (s == "c2") return CaseId::C2;
  if (s == "c3") return CaseId::C3;
  if (s == "c4a") return CaseId::C4a;
  if (s == "c4b") return CaseId::C4b;
  return std::nullopt;
}

XiSpec parse_basis(const std::string &spec) {
  if (std::optional<CaseId> c = parse_case(spec)) return XiSpec::from_preset(*c);
  std::vector<std::string> toks = split(spec, ',');
  if (toks.size() != 2)
    throw std::invalid_argument("basis must be a preset (c1..c4b) or 'x1,y1'");
  return XiSpec::from_params(
      BasisParams::from_xy(parse_complex(toks[0]), parse_complex(toks[1])));
}

std::uint64_t default_seed() {
  if (const char *env = std::getenv("QOS3_SEED")) {
    std::uint64_t v = 0;
    auto res = std::from_chars(env, env + std::string(env).size(), v);
    if (res.ec == std::errc()) return v;
  }
  return 0;
}

void print_samples(const BranchEnumeration &e, int count, std::mt19937_64 &rng) {
  // Demonstration traces: draw branches according to their probabilities.
  std::cout << "sampled runs (" << count << "):\n";
  for (int i = 0; i < count; ++i) {
    double x = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
    double acc = 0;
    const Branch *chosen = &e.branches.back();
    for (const Branch &b : e.branches) {
      acc += b.probability;
      if (x < acc) {
        chosen = &b;
        break;
      }
    }
    std::cout << "  run " << i << ":";
    for (const auto &[id, outcome] : chosen->outcome_path)
      std::cout << " " << id << "=" << outcome;
    std::cout << (chosen->protocol_success ? "  -> success" : "  -> abort") << "\n";
  }
}

int run_simulate(const std::string &scheme, const std::string &u_spec,
                 const std::string &chi_spec, const std::string &basis_spec,
                 const std::string &declared_spec, std::uint64_t seed,
                 const std::string &output, int sample_count) {
  std::mt19937_64 rng(seed);
  Unitary u = parse_u(u_spec, rng);
  std::array<Complex, 3> chi = parse_chi(chi_spec, rng);

  std::optional<FamilyId> declared;
  if (!declared_spec.empty()) {
    declared = parse_family(declared_spec);
    if (!declared) throw std::invalid_argument("unknown family '" + declared_spec + "'");
  }

  BranchEnumeration e = [&] {
    if (scheme == "s1") {
      if (!basis_spec.empty())
        throw std::invalid_argument("--basis applies to scheme s2 only");
      if (declared) throw std::invalid_argument("--declared applies to scheme s2 only");
      return run_scheme1(u, chi);
    }
    if (scheme == "s2") {
      XiSpec xi = basis_spec.empty() ? XiSpec::from_preset(CaseId::C1) : parse_basis(basis_spec);
      return run_scheme2(u, chi, xi, declared);
    }
    throw std::invalid_argument("scheme must be s1 or s2");
  }();

  if (output == "json") {
    std::cout << enumeration_to_json(e, seed);
  } else {
    std::cout << render_enumeration(e);
    if (sample_count > 0) print_samples(e, sample_count, rng);
  }

  if (std::abs(e.total_probability() - 1.0) > kTol) {
    std::cerr << "error: branch probabilities do not sum to 1\n";
    return 1;
  }
  verify_branch_messages(e);  // throws on accounting violations
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact branch-enumeration simulator for two three-party "
               "single-qutrit operation-sharing protocols"};
  app.require_subcommand(1);

  std::string scheme = "s1", u_spec = "random", chi_spec = "random";
  std::string basis_spec, declared_spec, output = "human";
  std::uint64_t seed = default_seed();
  int sample_count = 0;

  CLI::App *simulate = app.add_subcommand("simulate", "enumerate every branch of one run");
  simulate->add_option("--scheme", scheme, "s1 or s2")->required();
  simulate->add_option("--u", u_spec, "random | family:<id>:<mu,...> | matrix:<9 entries>");
  simulate->add_option("--chi", chi_spec, "random | a,b,c (complex amplitudes)");
  simulate->add_option("--basis", basis_spec, "s2 xi basis: c1..c4b or x1,y1");
  simulate->add_option("--declared", declared_spec, "declared operation family (e.g. u12)");
  simulate->add_option("--seed", seed, "RNG seed (default: QOS3_SEED or 0)");
  simulate->add_option("--output", output, "human or json")
      ->check(CLI::IsMember({"human", "json"}));
  simulate->add_option("--sample", sample_count, "also print N sampled demonstration runs");

  std::string cls_matrix, cls_family;
  bool cls_random = false;
  CLI::App *classify_cmd = app.add_subcommand("classify", "family membership and commutation report");
  classify_cmd->add_option("--matrix", cls_matrix, "9 row-major complex entries");
  classify_cmd->add_option("--family", cls_family, "family:<id>:<mu,...> shorthand");
  classify_cmd->add_flag("--random", cls_random, "classify a random unitary");
  classify_cmd->add_option("--seed", seed, "RNG seed (default: QOS3_SEED or 0)");
  classify_cmd->add_option("--output", output, "human or json")
      ->check(CLI::IsMember({"human", "json"}));

  CLI::App *table_cmd = app.add_subcommand("table1", "recompute the scheme comparison table");
  table_cmd->add_option("--seed", seed, "RNG seed (default: QOS3_SEED or 0)");
  table_cmd->add_option("--output", output, "human or json")
      ->check(CLI::IsMember({"human", "json"}));

  CLI::App *bases_cmd = app.add_subcommand("bases", "print the preset xi bases and W operators");

  CLI11_PARSE(app, argc, argv);

  try {
    if (simulate->parsed())
      return run_simulate(scheme, u_spec, chi_spec, basis_spec, declared_spec, seed, output,
                          sample_count);
    if (classify_cmd->parsed()) {
      std::mt19937_64 rng(seed);
      std::string spec;
      if (!cls_matrix.empty())
        spec = "matrix:" + cls_matrix;
      else if (!cls_family.empty())
        spec = cls_family.rfind("family:", 0) == 0 ? cls_family : "family:" + cls_family;
      else if (cls_random)
        spec = "random";
      else
        throw std::invalid_argument("classify needs --matrix, --family or --random");
      ClassifyReport r = compute_classify(parse_u(spec, rng));
      std::cout << (output == "json" ? classify_to_json(r) : render_classify(r));
      return 0;
    }
    if (table_cmd->parsed()) {
      std::vector<TableRow> rows = compute_table(seed);
      std::cout << (output == "json" ? table_to_json(rows, seed) : render_table(rows));
      return table_all_pass(rows) ? 0 : 1;
    }
    if (bases_cmd->parsed()) {
      std::cout << render_bases();
      return 0;
    }
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 2;
}
