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

// The d-round sum-check over sum_{x in {0,1}^d} p~(chi~(x)): honest round
// polynomials and the verifier's per-round and final checks.

#ifndef SIPF0_SUMCHECK_H_
#define SIPF0_SUMCHECK_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sipf0/encoding.h"
#include "sipf0/field.h"
#include "sipf0/instance.h"

namespace sipf0 {

struct RoundMessage {
  int round = 0;             // j in [1, d]
  std::vector<Elem> coeffs;  // ascending, untrimmed
};

enum class RejectReason {
  kDegreeViolation,
  kSumMismatch,
  kFinalMismatch,
  kNonBaseResidue,
};

std::string_view to_string(RejectReason reason);

// Verifier-side state between rounds of one prime instance.
struct RoundContext {
  const InstanceParams* inst = nullptr;
  int completed_rounds = 0;
  // g_1(0) + g_1(1), fixed after round 1.
  Elem claimed_residue;
  // g_j(r_j) after round j.
  Elem running_claim;
  std::vector<Elem> used_challenges;
};

RoundContext begin_rounds(const InstanceParams& inst);

// g(0) + g(1).
Elem claimed_residue(const UniPoly& g1);

// Consumes msg.coeffs as a stream with probes {0, 1, challenge}, where
// `challenge` is r_j. Rejects on degree > L(q-1), or for j >= 2 when
// g_j(0) + g_j(1) differs from the running claim. On success g_j(r_j)
// becomes the running claim. Throws std::logic_error on an out-of-order
// round.
std::optional<RejectReason> verifier_round_check(RoundContext& ctx,
                                                 const RoundMessage& msg,
                                                 const Elem& challenge);

// After round d: accept iff g_d(r_d) equals the value streamed from B.
std::optional<RejectReason> verifier_final_check(const RoundContext& ctx,
                                                 const Elem& streamed_value);

// Per-symbol code weights sum_{k : a_k = a} G[i][k], accumulated while the
// prover watches the stream. Enough to rebuild every round polynomial.
class SymbolWeights {
 public:
  explicit SymbolWeights(const InstanceParams& inst);

  // Symbol at 1-based stream position k.
  void observe(Symbol a, uint64_t k);

  size_t distinct() const { return symbols_.size(); }
  Symbol symbol(size_t idx) const { return symbols_[idx]; }
  // L weights of symbol(idx), 0-based row order.
  std::span<const uint32_t> weights(size_t idx) const {
    return std::span<const uint32_t>(weights_).subspan(idx * rows_, rows_);
  }

 private:
  const InstanceParams* inst_;
  uint32_t rows_;
  std::unordered_map<Symbol, size_t> index_;
  std::vector<Symbol> symbols_;
  std::vector<uint32_t> weights_;
};

// g_j from precomputed weights: symbols are grouped by their suffix bits
// j+1..d, each group contributes 1 - prod_i (1 - (A_i X + C_i)^(q-1)), and
// the sum is evaluated at the L(q-1)+1 interpolation nodes in parallel.
UniPoly honest_round_poly(const InstanceParams& inst,
                          const SymbolWeights& weights,
                          std::span<const Elem> r_prefix, int j);

// Serial, literal form of the same sum: at every node and every Boolean
// suffix, chi~ of every stream position, then p~. Cost grows as
// 2^(d-j) * n * L(q-1); meant for small instances.
UniPoly honest_round_poly_reference(std::span<const Symbol> stream,
                                    const InstanceParams& inst,
                                    std::span<const Elem> r_prefix, int j);

}  // namespace sipf0

#endif  // SIPF0_SUMCHECK_H_
