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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sipf0/adversary.h"
#include "sipf0/encoding.h"
#include "sipf0/protocol.h"
#include "sipf0/reference.h"

namespace sipf0 {
namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("%s criterion %2d: %s\n", pass ? "PASS" : "FAIL", id,
              detail.c_str());
  std::fflush(stdout);
  failures += !pass;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

std::vector<Symbol> random_stream(uint64_t m, size_t n, std::mt19937_64& rng) {
  // Draw from a random sub-universe half the time so F0 spans a wide range.
  const uint64_t support = rng() % 2 ? m : 1 + rng() % m;
  std::vector<Symbol> s(n);
  for (auto& a : s) a = 1 + rng() % support;
  return s;
}

// Round identities of one completed instance.
bool round_identities_hold(const InstanceRecord& rec, int d) {
  if (rec.rounds.size() != static_cast<size_t>(d)) return false;
  const ExtField& f = *rec.field;
  for (int j = 2; j <= d; ++j) {
    const UniPoly prev(f, rec.rounds[j - 2].coeffs);
    const UniPoly cur(f, rec.rounds[j - 1].coeffs);
    if (prev.eval(rec.challenges[j - 2]) !=
        cur.eval(f.zero()) + cur.eval(f.one())) {
      return false;
    }
  }
  const UniPoly last(f, rec.rounds[d - 1].coeffs);
  return last.eval(rec.challenges[d - 1]) == rec.streamed_value;
}

bool is_complete(const Transcript& t) {
  for (const InstanceRecord& rec : t.instances) {
    if (rec.reason && rec.reason != RejectReason::kFinalMismatch &&
        rec.reason != RejectReason::kNonBaseResidue) {
      return false;
    }
  }
  return true;
}

struct RoundCounts {
  int completed = 0;
  int wrong = 0;
  void add(const Transcript& t) {
    if (!is_complete(t)) return;
    ++this->completed;
    bool ok = t.rounds == t.d;
    for (const InstanceRecord& rec : t.instances) {
      ok = ok && rec.rounds.size() == static_cast<size_t>(t.d);
    }
    wrong += !ok;
  }
};

RoundCounts round_counts;

// Criteria 1, 2 and 5.
void honest_runs() {
  struct Plan {
    uint64_t m;
    int runs;
  };
  const std::vector<Plan> plan = {{8, 80}, {64, 70}, {256, 40}, {1024, 10}};
  int total = 0, accepted = 0, wrong = 0, identity_runs = 0,
      identity_failures = 0;
  std::map<uint64_t, double> seconds;
  for (const Plan& p : plan) {
    for (int i = 0; i < p.runs; ++i) {
      const uint64_t seed = 1000 * p.m + i;
      std::mt19937_64 rng(seed);
      const size_t n = (i % 2 ? 4 : 2) * p.m;
      const auto stream = random_stream(p.m, n, rng);
      const Setup setup = derive_params(p.m, seed);
      HonestProver prover;
      const auto start = Clock::now();
      const Transcript t = run_interaction(stream, setup, prover);
      seconds[p.m] +=
          std::chrono::duration<double>(Clock::now() - start).count();
      ++total;
      round_counts.add(t);
      if (t.accepted) {
        ++accepted;
        wrong += *t.f0 != reference::brute_force_f0(stream);
      }
      if (identity_runs < 50 || p.m >= 256) {
        ++identity_runs;
        for (const InstanceRecord& rec : t.instances) {
          identity_failures += !round_identities_hold(rec, t.d);
        }
      }
    }
  }
  std::string timing;
  for (const auto& [m, s] : seconds)
    timing += fmt(" m=%llu:%.1fs", (unsigned long long)m, s);
  report(1, total >= 200 && wrong == 0,
         fmt("%d honest runs, %d accepted, %d wrong F0 (tolerance 0);%s", total,
             accepted, wrong, timing.c_str()));
  const double rate = static_cast<double>(accepted) / total;
  report(2, rate >= 5.0 / 6.0,
         fmt("honest acceptance %.4f over %d runs (need >= %.4f)", rate, total,
             5.0 / 6.0));
  report(5, identity_runs >= 50 && identity_failures == 0,
         fmt("%d honest runs checked, %d identity failures (tolerance 0)",
             identity_runs, identity_failures));
}

// Criterion 3.
void soundness() {
  constexpr uint64_t kM = 64;
  constexpr int kTrials = 200;
  int wrong = 0;
  std::vector<int> survived;
  std::vector<double> bound;
  std::vector<uint32_t> primes;
  for (int trial = 0; trial < kTrials; ++trial) {
    const uint64_t seed = 777000 + trial;
    std::mt19937_64 rng(seed);
    const auto stream = random_stream(kM, 4 * kM, rng);
    const Setup setup = derive_params(kM, seed);
    AdaptiveShiftProver adv(1);
    const Transcript t = run_interaction(stream, setup, adv);
    round_counts.add(t);
    wrong += t.accepted && *t.f0 != reference::brute_force_f0(stream);
    survived.resize(t.instances.size(), 0);
    bound.resize(t.instances.size(), 0);
    primes.resize(t.instances.size(), 0);
    for (size_t i = 0; i < t.instances.size(); ++i) {
      const InstanceRecord& rec = t.instances[i];
      survived[i] += rec.accepted;
      bound[i] = rec.L * (rec.q - 1.0) * t.d / std::pow(rec.q, rec.lambda);
      primes[i] = rec.q;
    }
  }
  bool per_instance_ok = true;
  std::string detail;
  for (size_t i = 0; i < survived.size(); ++i) {
    const double rate = static_cast<double>(survived[i]) / kTrials;
    const double limit = bound[i] + 4 * std::sqrt(bound[i] / kTrials);
    per_instance_ok = per_instance_ok && rate <= limit;
    detail += fmt(" q=%u:%.3f<=%.3g", primes[i], rate, limit);
  }
  const double wrong_rate = static_cast<double>(wrong) / kTrials;
  report(3, wrong_rate <= 1.0 / 3.0 && per_instance_ok,
         fmt("adaptive-shift wrong-accept %.4f over %d runs (need <= 1/3); "
             "final-check survival%s",
             wrong_rate, kTrials, detail.c_str()));
}

// Criterion 4.
void or_sum_identity() {
  constexpr uint64_t kM = 4;
  const Setup setup = derive_params(kM, 0);
  const InstanceParams& inst = setup.instances.front();
  const ExtField& f = *inst.field;
  const int d = inst.d();
  int streams = 0, mismatches = 0;
  for (size_t n = 0; n <= 3; ++n) {
    std::vector<Symbol> s(n, 1);
    while (true) {
      ++streams;
      uint64_t sum = 0;
      for (uint64_t x = 0; x < (uint64_t{1} << d); ++x) {
        std::vector<Elem> point;
        for (int j = 1; j <= d; ++j)
          point.push_back(f.from_base((x >> (d - j)) & 1));
        bool any = false;
        for (Symbol a : s)
          any = any || chi_tilde_eval(inst.encoding, a, point) == f.one();
        sum += any;
      }
      const uint64_t f0 = reference::brute_force_f0(s);
      const auto oracle = reference::brute_force_or_sum(s, kM, 2, 1, 0);
      mismatches += sum != f0 || oracle.exact_or_sum != f0;
      size_t i = 0;
      while (i < n && s[i] == kM) s[i++] = 1;
      if (i == n) break;
      ++s[i];
    }
  }
  report(4, mismatches == 0,
         fmt("%d streams (m=4, n<=3) over all %d cube points, %d mismatches "
             "(tolerance 0)",
             streams, 1 << d, mismatches));
}

// Criterion 6.
void or_failure_probability() {
  constexpr int kSeeds = 100000;
  int bad = 0;
  for (int seed = 0; seed < kSeeds; ++seed) {
    std::mt19937_64 rng(seed);
    const size_t n = 1 + rng() % 64;
    std::vector<uint32_t> x(n);
    for (auto& v : x) v = rng() & 1;
    x[rng() % n] = 1;
    const ApproxOrSpec spec(CodeOracle(seed, PrimeModulus(2), 3));
    bad += spec.p_eval(x) != 1;
  }
  const double rate = static_cast<double>(bad) / kSeeds;
  const double limit = std::pow(2.0 / 3.0, 3) + 4 * std::sqrt(0.3 / kSeeds);
  report(6, rate <= limit,
         fmt("Pr[p != OR] = %.5f over %d seeds, L=3, q=2 (need <= %.5f)", rate,
             kSeeds, limit));
}

// Criterion 7.
void crt() {
  int mismatches = 0, checked = 0;
  const std::vector<uint64_t> small = {2, 3, 5, 7};
  for (uint64_t v = 0; v < 2 * 3 * 5 * 7; ++v) {
    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    std::vector<uint64_t> r;
    for (uint64_t q : small) {
      pairs.emplace_back(v % q, q);
      r.push_back(v % q);
    }
    const uint64_t got = crt_recombine(pairs);
    mismatches += got != v || got != reference::crt_scan_oracle(r, small);
    ++checked;
  }
  const Setup setup = derive_params(1024, 0);
  std::vector<uint64_t> moduli(setup.params.primes.begin(),
                               setup.params.primes.end());
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::pair<uint64_t, uint64_t>> pairs;
    std::vector<uint64_t> r;
    for (uint64_t q : moduli) {
      r.push_back(rng() % q);
      pairs.emplace_back(r.back(), q);
    }
    const uint64_t got = crt_recombine(pairs);
    bool ok = got == reference::crt_sieve_oracle(r, moduli);
    for (size_t i = 0; i < moduli.size(); ++i)
      ok = ok && got % moduli[i] == r[i];
    mismatches += !ok;
    ++checked;
  }
  report(7, mismatches == 0,
         fmt("%d residue vectors ({2,3,5,7} exhaustive, 1000 at the %zu "
             "primes of m=1024), %d mismatches",
             checked, moduli.size(), mismatches));
}

// Criterion 8.
void verifier_space() {
  constexpr uint64_t kM = 256;
  constexpr uint64_t kSeed = 8;
  std::vector<std::string> dumps;
  std::vector<uint64_t> bits;
  for (size_t n : {size_t{1} << 8, size_t{1} << 12}) {
    std::mt19937_64 rng(n);
    const auto stream = random_stream(kM, n, rng);
    const Setup setup = derive_params(kM, kSeed);
    HonestProver prover;
    const Transcript t = run_interaction(stream, setup, prover);
    round_counts.add(t);
    bits.push_back(t.verifier_state_bits);
    dumps.push_back(
        to_json(accounting_report(t))["verifier_state_bits"].dump());
  }
  report(8, dumps[0] == dumps[1],
         fmt("verifier_state_bits %llu at n=2^8, %llu at n=2^12 (m=256)",
             (unsigned long long)bits[0], (unsigned long long)bits[1]));
}

// Criterion 10.
void degree_rejection() {
  constexpr int kTrials = 100;
  int rejected = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    std::mt19937_64 rng(trial);
    const uint64_t m = 64;
    const auto stream = random_stream(m, 1 + rng() % (4 * m), rng);
    const Setup setup = derive_params(m, 31000 + trial);
    DegreeViolatingProver adv;
    const Transcript t = run_interaction(stream, setup, adv);
    rejected +=
        !t.accepted && t.reject_reason == "degree-violation" && t.comm_bits > 0;
  }
  report(10, rejected == kTrials,
         fmt("degree-violate rejected with degree-violation in %d/%d trials",
             rejected, kTrials));
}

// Criterion 11.
void per_symbol_cost() {
  auto measure = [](uint64_t m, double* ns) {
    const Setup setup = derive_params(m, 0);
    VerifierStreamState probe(setup);
    probe.ingest(m / 2 + 1);
    std::mt19937_64 rng(m);
    std::vector<Symbol> stream(1024);
    for (auto& a : stream) a = 1 + rng() % m;
    VerifierStreamState timed(setup);
    const auto start = Clock::now();
    for (Symbol a : stream) timed.ingest(a);
    *ns =
        std::chrono::duration<double, std::nano>(Clock::now() - start).count() /
        stream.size();
    return probe.total_field_ops();
  };
  double ns6 = 0, ns12 = 0;
  const uint64_t ops6 = measure(64, &ns6);
  const uint64_t ops12 = measure(4096, &ns12);
  const double ratio = static_cast<double>(ops12) / ops6;
  report(11, ratio <= 16.0,
         fmt("field ops per symbol %llu (m=2^6) and %llu (m=2^12), ratio "
             "%.2f (need <= 16); wall clock %.0f ns and %.0f ns (not gated)",
             (unsigned long long)ops6, (unsigned long long)ops12, ratio, ns6,
             ns12));
}

}  // namespace
}  // namespace sipf0

int main() {
  using namespace sipf0;
  honest_runs();
  soundness();
  or_sum_identity();
  or_failure_probability();
  crt();
  verifier_space();
  report(9, round_counts.completed > 0 && round_counts.wrong == 0,
         fmt("%d completed transcripts, %d without exactly d rounds",
             round_counts.completed, round_counts.wrong));
  degree_rejection();
  per_symbol_cost();
  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
