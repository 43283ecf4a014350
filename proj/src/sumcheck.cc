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

#include "sipf0/sumcheck.h"

#include <stdexcept>

namespace sipf0 {

InstanceParams make_instance(PrimeModulus q, int lambda, uint32_t L,
                             uint64_t code_seed, const SymbolEncoding& enc) {
  auto field = std::make_shared<const ExtField>(q, lambda);
  ApproxOrSpec approx(CodeOracle(code_seed, q, L));
  const uint64_t nodes = approx.max_degree() + 1;
  if (nodes > field->order()) throw std::invalid_argument("field too small");
  std::vector<Elem> xs;
  xs.reserve(nodes);
  for (uint64_t t = 0; t < nodes; ++t) xs.push_back(field->from_index(t));
  auto domain =
      std::make_shared<const InterpolationDomain>(*field, std::move(xs));
  return InstanceParams{q, std::move(field), approx, enc, std::move(domain)};
}

std::string_view to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::kDegreeViolation:
      return "degree-violation";
    case RejectReason::kSumMismatch:
      return "sum-mismatch";
    case RejectReason::kFinalMismatch:
      return "final-mismatch";
    case RejectReason::kNonBaseResidue:
      return "non-base-residue";
  }
  return "unknown";
}

RoundContext begin_rounds(const InstanceParams& inst) {
  RoundContext ctx;
  ctx.inst = &inst;
  ctx.claimed_residue = inst.field->zero();
  ctx.running_claim = inst.field->zero();
  return ctx;
}

Elem claimed_residue(const UniPoly& g1) {
  const ExtField& f = g1.field();
  return f.add(g1.eval(f.zero()), g1.eval(f.one()));
}

std::optional<RejectReason> verifier_round_check(RoundContext& ctx,
                                                 const RoundMessage& msg,
                                                 const Elem& challenge) {
  if (msg.round != ctx.completed_rounds + 1) {
    throw std::logic_error("round message out of order");
  }
  const ExtField& f = *ctx.inst->field;
  StreamingProbe probe(f, {f.zero(), f.one(), challenge});
  for (const Elem& c : msg.coeffs) probe.push(c);
  if (probe.degree() > static_cast<int64_t>(ctx.inst->max_degree())) {
    return RejectReason::kDegreeViolation;
  }
  const auto& v = probe.values();
  const Elem sum = f.add(v[0], v[1]);
  if (msg.round == 1) {
    ctx.claimed_residue = sum;
  } else if (!(sum == ctx.running_claim)) {
    return RejectReason::kSumMismatch;
  }
  ctx.running_claim = v[2];
  ctx.used_challenges.push_back(challenge);
  ++ctx.completed_rounds;
  return std::nullopt;
}

std::optional<RejectReason> verifier_final_check(const RoundContext& ctx,
                                                 const Elem& streamed_value) {
  if (ctx.completed_rounds != ctx.inst->d()) {
    throw std::logic_error("final check before the last round");
  }
  if (!(ctx.running_claim == streamed_value)) {
    return RejectReason::kFinalMismatch;
  }
  return std::nullopt;
}

SymbolWeights::SymbolWeights(const InstanceParams& inst)
    : inst_(&inst), rows_(inst.L()) {}

void SymbolWeights::observe(Symbol a, uint64_t k) {
  auto [it, inserted] = index_.try_emplace(a, symbols_.size());
  if (inserted) {
    symbols_.push_back(a);
    weights_.resize(weights_.size() + rows_, 0);
  }
  uint32_t* w = weights_.data() + it->second * rows_;
  const CodeOracle& code = inst_->approx.code();
  const uint32_t q = inst_->q.value();
  for (uint32_t i = 0; i < rows_; ++i) {
    w[i] = (w[i] + code.entry(i + 1, k)) % q;
  }
}

}  // namespace sipf0
