// Copyright 2026 The sip-f0 Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sipf0/cli.h"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sipf0/protocol.h"
#include "sipf0/reference.h"

namespace sipf0::cli {

namespace {

constexpr uint64_t kStreamTag = 0x73747265616d5f5fULL;  // "stream__"
constexpr uint64_t kTrialTag = 0x747269616c5f5f5fULL;   // "trial___"
constexpr uint64_t kAdversaryTag = 0x6164766572736172ULL;

bool write_file(const std::string& path, const std::string& body,
                std::ostream& err) {
  std::ofstream f(path);
  if (!f) {
    err << "cannot write " << path << "\n";
    return false;
  }
  f << body;
  return static_cast<bool>(f);
}

ProverFactory prover_factory(const RunConfig& config, uint64_t seed) {
  if (!config.adversary) {
    return [] { return std::make_unique<HonestProver>(); };
  }
  const AdversaryKind kind = *config.adversary;
  const uint64_t adv_seed = prf64(seed, kAdversaryTag, 0, 0);
  return [kind, adv_seed] { return make_adversary(kind, 1, adv_seed); };
}

}  // namespace

std::vector<Symbol> read_stream(std::istream& in, uint64_t m) {
  std::vector<Symbol> out;
  std::string line;
  size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    if (token.find_first_not_of("0123456789") != std::string::npos ||
        token.size() > 19) {
      throw StreamParseError(number, "malformed symbol '" + token + "'");
    }
    const uint64_t a = std::stoull(token);
    if (a < 1 || a > m) {
      throw StreamParseError(number, "symbol " + token + " outside [1, " +
                                         std::to_string(m) + "]");
    }
    out.push_back(a);
  }
  return out;
}

void write_stream(std::ostream& out, const std::vector<Symbol>& stream) {
  for (Symbol a : stream) out << a << '\n';
}

std::vector<Symbol> random_stream(uint64_t m, uint64_t n, uint64_t seed) {
  std::vector<Symbol> out(n);
  for (uint64_t k = 0; k < n; ++k) {
    out[k] = 1 + prf64(seed ^ kStreamTag, m, n, k) % m;
  }
  return out;
}

int cmd_run(const RunConfig& config, std::istream& in, std::ostream& out,
            std::ostream& err) {
  std::vector<Symbol> stream;
  try {
    if (config.stream_path == "-") {
      stream = read_stream(in, config.universe);
    } else {
      std::ifstream f(config.stream_path);
      if (!f) {
        err << "cannot read " << config.stream_path << "\n";
        return kExitError;
      }
      stream = read_stream(f, config.universe);
    }
  } catch (const StreamParseError& e) {
    err << "invalid stream: " << e.what() << "\n";
    return kExitError;
  }

  const RepeatedResult result =
      run_repeated(stream, config.universe, config.seed, config.repeat,
                   prover_factory(config, config.seed));
  const Transcript& first = result.transcripts.front();
  if (!config.transcript_path.empty() &&
      !write_file(config.transcript_path, to_json(first).dump() + "\n", err)) {
    return kExitError;
  }
  if (!config.stats_path.empty() &&
      !write_file(config.stats_path,
                  to_json(accounting_report(first)).dump() + "\n", err)) {
    return kExitError;
  }

  const bool accepted = result.f0.has_value();
  if (accepted) {
    out << "F0 = " << *result.f0 << "\n";
    out << "verdict: accept\n";
  } else {
    out << "F0 = ⊥\n";
    out << "verdict: reject";
    if (config.repeat == 1) out << " (" << first.reject_reason << ")";
    out << "\n";
  }
  if (config.repeat > 1) {
    out << "accepted runs: " << result.accepted_runs << "/" << config.repeat
        << "\n";
  }
  return accepted ? kExitAccept : kExitReject;
}

int cmd_experiment(const RunConfig& config, std::ostream& out,
                   std::ostream& err) {
  const uint64_t m = config.universe;
  const uint64_t n = config.length ? config.length : 4 * m;
  const int64_t trials = static_cast<int64_t>(config.trials);
  const bool with_adversary = config.adversary.has_value();

  std::vector<int> honest_ok(trials, 0), adv_ok(trials, 0),
      adv_wrong(trials, 0);
  std::vector<uint64_t> comm(trials, 0), state(trials, 0);

#pragma omp parallel for schedule(dynamic)
  for (int64_t t = 0; t < trials; ++t) {
    const uint64_t seed = prf64(config.seed, kTrialTag, t, 0);
    const std::vector<Symbol> stream = random_stream(m, n, seed);
    const uint64_t truth = reference::brute_force_f0(stream);
    const Setup setup = derive_params(m, seed);

    HonestProver honest;
    const Transcript ht = run_interaction(stream, setup, honest);
    honest_ok[t] = ht.accepted && *ht.f0 == truth;
    comm[t] = ht.comm_bits;
    state[t] = ht.verifier_state_bits;

    if (with_adversary) {
      auto adv = make_adversary(*config.adversary, 1,
                                prf64(seed, kAdversaryTag, 0, 0));
      const Transcript at = run_interaction(stream, setup, *adv);
      adv_ok[t] = at.accepted;
      adv_wrong[t] = at.accepted && *at.f0 != truth;
    }
  }

  auto mean = [&](const auto& v) {
    double s = 0;
    for (auto x : v) s += static_cast<double>(x);
    return s / static_cast<double>(trials);
  };
  nlohmann::json stats{{"universe", m},
                       {"length", n},
                       {"trials", trials},
                       {"seed", config.seed},
                       {"accept_rate_honest", mean(honest_ok)},
                       {"mean_comm_bits", mean(comm)},
                       {"mean_state_bits", mean(state)}};
  if (with_adversary) {
    stats["adversary"] = std::string(to_string(*config.adversary));
    stats["accept_rate_adversary"] = mean(adv_ok);
    stats["wrong_accept_rate"] = mean(adv_wrong);
  } else {
    stats["adversary"] = nullptr;
    stats["accept_rate_adversary"] = nullptr;
    stats["wrong_accept_rate"] = nullptr;
  }
  const std::string body = stats.dump(2) + "\n";
  if (!config.stats_path.empty()) {
    return write_file(config.stats_path, body, err) ? kExitAccept : kExitError;
  }
  out << body;
  return kExitAccept;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  nlohmann::json sizes = nlohmann::json::array();
  double num = 0, den = 0;
  std::vector<std::pair<int, uint64_t>> points;
  for (int log_m = 4; log_m <= 12; ++log_m) {
    const uint64_t m = uint64_t{1} << log_m;
    const Setup setup = derive_params(m, config.seed);

    // Same count for a spread of symbol values.
    const std::vector<Symbol> probes = {1, m, m / 2, m / 3 + 1, m - 1};
    uint64_t ops = 0;
    bool independent = true;
    for (Symbol a : probes) {
      VerifierStreamState s(setup);
      s.ingest(a);
      if (ops == 0) ops = s.total_field_ops();
      independent = independent && s.total_field_ops() == ops;
    }

    const std::vector<Symbol> stream = random_stream(m, 2048, config.seed);
    VerifierStreamState timed(setup);
    const auto start = Clock::now();
    for (Symbol a : stream) timed.ingest(a);
    const double ns =
        std::chrono::duration<double, std::nano>(Clock::now() - start).count() /
        stream.size();

    const double d2 = static_cast<double>(log_m) * log_m;
    num += ops * d2;
    den += d2 * d2;
    points.emplace_back(log_m, ops);
    sizes.push_back({{"m", m},
                     {"d", log_m},
                     {"primes", setup.params.primes.size()},
                     {"ops_per_symbol", ops},
                     {"ops_data_independent", independent},
                     {"ns_per_symbol", ns}});
  }
  const double c = num / den;
  double max_rel = 0;
  for (const auto& [d, ops] : points) {
    const double fit = c * d * d;
    max_rel = std::max(max_rel, std::abs(ops - fit) / fit);
  }
  uint64_t ops6 = 0, ops12 = 0;
  for (const auto& [d, ops] : points) {
    if (d == 6) ops6 = ops;
    if (d == 12) ops12 = ops;
  }
  nlohmann::json report{
      {"sizes", std::move(sizes)},
      {"fit_d_squared", {{"c", c}, {"max_relative_residual", max_rel}}},
      {"ratio_m4096_over_m64", static_cast<double>(ops12) / ops6}};
  const std::string body = report.dump(2) + "\n";
  if (!config.stats_path.empty()) {
    return write_file(config.stats_path, body, err) ? kExitAccept : kExitError;
  }
  out << body;
  return kExitAccept;
}

int cli_main(int argc, const char* const* argv, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{
      "Streaming interactive proof for the number of distinct "
      "elements"};
  app.require_subcommand(1);

  RunConfig config;
  std::string adversary;
  bool seed_given = false;

  auto add_common = [&](CLI::App* sub, bool need_universe) {
    auto* u = sub->add_option("--universe", config.universe,
                              "Universe size m (symbols are 1..m)");
    if (need_universe) u->required();
    u->check(CLI::Range(uint64_t{2}, uint64_t{1} << 32));
    sub->add_option("--seed", config.seed, "Master seed (default 0)")
        ->each([&](const std::string&) { seed_given = true; });
    sub->add_option("--adversary", adversary,
                    "none|residue-lie|adaptive-shift|random-poly|"
                    "degree-violate");
    sub->add_option("--trials", config.trials, "Experiment trials")
        ->check(CLI::PositiveNumber);
    sub->add_option("--stream", config.stream_path, "Input path or -");
    sub->add_option("--transcript", config.transcript_path,
                    "Write the transcript JSON here");
    sub->add_option("--stats", config.stats_path, "Write stats JSON here");
    sub->add_option("--repeat", config.repeat,
                    "Independent repetitions, majority vote")
        ->check(CLI::PositiveNumber);
    sub->add_option("--length", config.length,
                    "Experiment stream length (default 4m)");
  };
  auto* run = app.add_subcommand("run", "Verify F0 of a stream");
  add_common(run, true);
  auto* experiment =
      app.add_subcommand("experiment", "Completeness/soundness statistics");
  add_common(experiment, true);
  auto* bench = app.add_subcommand("bench", "Per-symbol verifier cost");
  add_common(bench, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  if (!seed_given) {
    if (const char* env = std::getenv("SIP_F0_SEED")) {
      try {
        config.seed = std::stoull(env);
      } catch (const std::exception&) {
        err << "SIP_F0_SEED is not an unsigned integer\n";
        return kExitError;
      }
    }
  }
  if (!adversary.empty() && adversary != "none") {
    config.adversary = parse_adversary(adversary);
    if (!config.adversary) {
      err << "unknown adversary '" << adversary << "'\n";
      return kExitError;
    }
  } else if (adversary.empty() && *experiment) {
    config.adversary = AdversaryKind::kAdaptiveShift;
  }

  try {
    if (*run) return cmd_run(config, in, out, err);
    if (*experiment) return cmd_experiment(config, out, err);
    return cmd_bench(config, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace sipf0::cli
