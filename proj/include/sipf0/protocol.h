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

// Orchestration of the distinct-elements streaming proof: parameters, the
// verifier's one-pass state, the lockstep multi-prime interaction, CRT
// recombination and communication/space accounting.

#ifndef SIPF0_PROTOCOL_H_
#define SIPF0_PROTOCOL_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sipf0/encoding.h"
#include "sipf0/field.h"
#include "sipf0/instance.h"
#include "sipf0/sumcheck.h"

namespace sipf0 {

struct ProtocolParams {
  uint64_t m = 0;
  int d = 0;
  uint32_t L = 0;
  std::vector<uint32_t> primes;
  uint64_t seed = 0;
  // Shared by every prime; sent to the prover before the stream.
  uint64_t code_seed = 0;
  // max(primes) <= 2 d log2(d) + 2.
  bool primes_within_bound = true;
};

struct Setup {
  ProtocolParams params;
  std::vector<InstanceParams> instances;
};

// First `count` primes by sieve.
std::vector<uint32_t> first_primes(size_t count);

// Smallest lambda >= 1 with q^(lambda-1) >= 6 L d log2m.
int smallest_lambda(uint32_t q, uint32_t L, int d, int log2m);

// Throws std::invalid_argument when m < 2.
Setup derive_params(uint64_t m, uint64_t seed);

// r_1..r_d for one instance, uniform over F_{q^lambda}.
std::vector<Elem> draw_challenges(const InstanceParams& inst, uint64_t seed);

// Everything the verifier keeps while reading the stream: per prime the
// L x lambda B matrix and the d challenges, plus the length counter.
class VerifierStreamState {
 public:
  explicit VerifierStreamState(const Setup& setup);

  // Throws std::out_of_range for a symbol outside [1, m].
  void ingest(Symbol a);
  // Same result as calling ingest() on each symbol; instances are
  // processed in parallel.
  void ingest_batch(std::span<const Symbol> symbols);

  uint64_t length() const { return n_; }
  size_t instances() const { return b_.size(); }
  const BMatrix& matrix(size_t inst) const { return b_[inst]; }
  const std::vector<Elem>& challenges(size_t inst) const { return r_[inst]; }
  // p~(chi~(r)) per instance.
  std::vector<Elem> finalize() const;

  // Bits held besides the length counter: the code seed, every B entry
  // and every challenge coordinate.
  uint64_t state_bits() const;
  // Counted field operations for one symbol (data independent).
  uint64_t per_symbol_field_ops() const;
  uint64_t total_field_ops() const { return total_ops_; }

 private:
  uint64_t ingest_one(size_t inst, Symbol a, uint64_t k);

  const Setup* setup_;
  std::vector<BMatrix> b_;
  std::vector<std::vector<Elem>> r_;
  uint64_t n_ = 0;
  uint64_t total_ops_ = 0;
};

// Round-message interface shared by honest and cheating provers. The
// prover sees the stream symbol by symbol and challenges only as the
// verifier reveals them.
class Prover {
 public:
  virtual ~Prover() = default;

  virtual void begin(std::span<const InstanceParams> instances) = 0;
  virtual void observe(Symbol a) = 0;
  // r_{j-1} for instance `inst`, revealed at the start of round j.
  virtual void reveal(size_t inst, const Elem& r) = 0;
  virtual RoundMessage round_message(size_t inst, int j) = 0;
};

class HonestProver : public Prover {
 public:
  // `use_reference` selects the serial literal evaluator.
  explicit HonestProver(bool use_reference = false)
      : use_reference_(use_reference) {}

  void begin(std::span<const InstanceParams> instances) override;
  void observe(Symbol a) override;
  void reveal(size_t inst, const Elem& r) override;
  RoundMessage round_message(size_t inst, int j) override;

 protected:
  UniPoly honest_poly(size_t inst, int j) const;
  const InstanceParams& instance(size_t inst) const { return instances_[inst]; }
  const std::vector<Elem>& revealed(size_t inst) const {
    return revealed_[inst];
  }

 private:
  bool use_reference_;
  std::span<const InstanceParams> instances_;
  std::vector<Symbol> stream_;
  std::vector<SymbolWeights> weights_;
  std::vector<std::vector<Elem>> revealed_;
};

struct InstanceRecord {
  // Keeps the elements below valid after the Setup is gone.
  std::shared_ptr<const ExtField> field;
  uint32_t q = 0;
  int lambda = 0;
  uint32_t L = 0;
  // Coordinate 0 of g_1(0) + g_1(1); see residue_in_base.
  uint32_t residue = 0;
  bool residue_in_base = true;
  bool accepted = false;
  std::optional<RejectReason> reason;
  std::vector<RoundMessage> rounds;
  // r_1..r_{rounds-1} were revealed; the full vector is recorded after the
  // interaction so transcripts can be re-checked.
  std::vector<Elem> challenges;
  Elem streamed_value;
};

struct Transcript {
  uint64_t m = 0;
  uint64_t n = 0;
  int d = 0;
  uint64_t seed = 0;
  uint64_t code_seed = 0;
  std::vector<InstanceRecord> instances;
  // Lockstep rounds executed.
  int rounds = 0;
  std::optional<uint64_t> f0;
  bool accepted = false;
  // Empty on accept; otherwise the first instance reason or
  // "f0-out-of-range".
  std::string reject_reason;
  uint64_t comm_bits = 0;
  uint64_t verifier_state_bits = 0;
  uint64_t per_symbol_field_ops = 0;
};

Transcript run_interaction(std::span<const Symbol> stream, const Setup& setup,
                           Prover& prover);

// Unique v in [0, prod q) with v = r mod q for every (r, q). Throws
// std::invalid_argument unless the moduli are pairwise coprime.
uint64_t crt_recombine(std::span<const std::pair<uint64_t, uint64_t>> residues);

struct AccountingReport {
  uint64_t comm_bits = 0;
  uint64_t verifier_state_bits = 0;
  int rounds = 0;
  uint64_t per_symbol_field_ops = 0;
};

AccountingReport accounting_report(const Transcript& t);

nlohmann::json to_json(const Transcript& t);
nlohmann::json to_json(const AccountingReport& r);

// Majority vote over `repeat` runs with seeds derived from `seed`.
struct RepeatedResult {
  std::optional<uint64_t> f0;
  int accepted_runs = 0;
  std::vector<Transcript> transcripts;
};

using ProverFactory = std::function<std::unique_ptr<Prover>()>;

RepeatedResult run_repeated(std::span<const Symbol> stream, uint64_t m,
                            uint64_t seed, int repeat,
                            const ProverFactory& make_prover);

// Seed of repetition `index`; index 0 is `seed` itself.
uint64_t repetition_seed(uint64_t seed, int index);

}  // namespace sipf0

#endif  // SIPF0_PROTOCOL_H_
