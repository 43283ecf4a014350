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

#include "sipf0/adversary.h"

#include <stdexcept>

namespace sipf0 {

std::string_view to_string(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::kResidueLie:
      return "residue-lie";
    case AdversaryKind::kAdaptiveShift:
      return "adaptive-shift";
    case AdversaryKind::kRandomPoly:
      return "random-poly";
    case AdversaryKind::kDegreeViolate:
      return "degree-violate";
  }
  return "unknown";
}

std::optional<AdversaryKind> parse_adversary(std::string_view tag) {
  for (AdversaryKind k :
       {AdversaryKind::kResidueLie, AdversaryKind::kAdaptiveShift,
        AdversaryKind::kRandomPoly, AdversaryKind::kDegreeViolate}) {
    if (tag == to_string(k)) return k;
  }
  return std::nullopt;
}

std::vector<Elem> sum_correction(const ExtField& field, const Elem& diff) {
  if (field.q() == 2) return {field.zero(), diff};
  const Elem half = field.inv(field.from_base(2));
  return {field.mul(diff, half)};
}

namespace {

void add_into(std::vector<Elem>& coeffs, const std::vector<Elem>& extra) {
  for (size_t i = 0; i < extra.size(); ++i) {
    coeffs[i] = coeffs[i] + extra[i];
  }
}

}  // namespace

RoundMessage ResidueLieProver::round_message(size_t inst, int j) {
  RoundMessage msg = HonestProver::round_message(inst, j);
  if (j == 1) {
    const ExtField& f = *instance(inst).field;
    add_into(msg.coeffs, sum_correction(f, f.from_base(delta_)));
  }
  return msg;
}

void AdaptiveShiftProver::begin(std::span<const InstanceParams> instances) {
  HonestProver::begin(instances);
  last_sent_.assign(instances.size(), {});
  corrections_.assign(instances.size(), {});
}

RoundMessage AdaptiveShiftProver::round_message(size_t inst, int j) {
  RoundMessage msg = HonestProver::round_message(inst, j);
  const ExtField& f = *instance(inst).field;
  Elem diff = f.from_base(delta_);
  if (j >= 2) {
    // The verifier now expects g^_{j-1}(r_{j-1}).
    const UniPoly previous(f, last_sent_[inst]);
    const Elem claim = previous.eval(revealed(inst)[j - 2]);
    const UniPoly honest(f, msg.coeffs);
    diff = f.sub(claim, claimed_residue(honest));
  }
  std::vector<Elem> correction = sum_correction(f, diff);
  add_into(msg.coeffs, correction);
  corrections_[inst].push_back(std::move(correction));
  last_sent_[inst] = msg.coeffs;
  return msg;
}

RoundMessage RandomPolyProver::round_message(size_t inst, int j) {
  const InstanceParams& p = instance(inst);
  const ExtField& f = *p.field;
  std::uniform_int_distribution<uint64_t> coord(0, f.q() - 1);
  RoundMessage msg{j, {}};
  std::vector<uint32_t> c(f.lambda());
  for (size_t i = 0; i < p.message_length(); ++i) {
    for (auto& v : c) v = static_cast<uint32_t>(coord(rng_));
    msg.coeffs.push_back(f.from_coords(c));
  }
  return msg;
}

RoundMessage DegreeViolatingProver::round_message(size_t inst, int j) {
  RoundMessage msg = HonestProver::round_message(inst, j);
  msg.coeffs.push_back(instance(inst).field->one());
  return msg;
}

std::unique_ptr<Prover> make_adversary(AdversaryKind kind, uint64_t delta,
                                       uint64_t seed) {
  switch (kind) {
    case AdversaryKind::kResidueLie:
      return residue_lie_prover(delta);
    case AdversaryKind::kAdaptiveShift:
      return adaptive_shift_prover(delta);
    case AdversaryKind::kRandomPoly:
      return random_poly_prover(seed);
    case AdversaryKind::kDegreeViolate:
      return degree_violating_prover();
  }
  throw std::invalid_argument("unknown adversary");
}

}  // namespace sipf0
