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

// Cheating provers for soundness experiments. Each one wraps the honest
// computation and perturbs what it sends.

#ifndef SIPF0_ADVERSARY_H_
#define SIPF0_ADVERSARY_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "sipf0/protocol.h"

namespace sipf0 {

enum class AdversaryKind {
  kResidueLie,
  kAdaptiveShift,
  kRandomPoly,
  kDegreeViolate,
};

std::string_view to_string(AdversaryKind kind);
// Accepts residue-lie, adaptive-shift, random-poly, degree-violate.
std::optional<AdversaryKind> parse_adversary(std::string_view tag);

// Polynomial c with c(0) + c(1) = diff: the constant diff/2 in odd
// characteristic, diff * X in characteristic 2.
std::vector<Elem> sum_correction(const ExtField& field, const Elem& diff);

// Sends g_1 + c with c(0) + c(1) = delta, then plays honestly.
class ResidueLieProver : public HonestProver {
 public:
  explicit ResidueLieProver(uint64_t delta) : delta_(delta) {}
  RoundMessage round_message(size_t inst, int j) override;

 private:
  uint64_t delta_;
};

// Lies about the residue at round 1 and then keeps every intermediate sum
// check satisfied by adding the correction that matches the running claim.
class AdaptiveShiftProver : public HonestProver {
 public:
  explicit AdaptiveShiftProver(uint64_t delta) : delta_(delta) {}

  void begin(std::span<const InstanceParams> instances) override;
  RoundMessage round_message(size_t inst, int j) override;

  // Corrections sent so far for `inst`, one per round.
  const std::vector<std::vector<Elem>>& corrections(size_t inst) const {
    return corrections_[inst];
  }

 private:
  uint64_t delta_;
  std::vector<std::vector<Elem>> last_sent_;
  std::vector<std::vector<std::vector<Elem>>> corrections_;
};

// Uniformly random coefficients of legal degree every round.
class RandomPolyProver : public HonestProver {
 public:
  explicit RandomPolyProver(uint64_t seed) : rng_(seed) {}
  RoundMessage round_message(size_t inst, int j) override;

 private:
  std::mt19937_64 rng_;
};

// Honest g_1 plus X^(L(q-1)+1).
class DegreeViolatingProver : public HonestProver {
 public:
  RoundMessage round_message(size_t inst, int j) override;
};

inline std::unique_ptr<Prover> residue_lie_prover(uint64_t delta) {
  return std::make_unique<ResidueLieProver>(delta);
}
inline std::unique_ptr<Prover> adaptive_shift_prover(uint64_t delta) {
  return std::make_unique<AdaptiveShiftProver>(delta);
}
inline std::unique_ptr<Prover> random_poly_prover(uint64_t seed) {
  return std::make_unique<RandomPolyProver>(seed);
}
inline std::unique_ptr<Prover> degree_violating_prover() {
  return std::make_unique<DegreeViolatingProver>();
}

// delta = 1 targets F0 + 1 after recombination.
std::unique_ptr<Prover> make_adversary(AdversaryKind kind, uint64_t delta,
                                       uint64_t seed);

}  // namespace sipf0

#endif  // SIPF0_ADVERSARY_H_
