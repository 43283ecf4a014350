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

#ifndef SIPF0_INSTANCE_H_
#define SIPF0_INSTANCE_H_

#include <cstdint>
#include <memory>

#include "sipf0/encoding.h"
#include "sipf0/field.h"

namespace sipf0 {

// Public per-prime setup shared by prover and verifier. The verifier's
// challenges are not part of it; they live in VerifierStreamState.
struct InstanceParams {
  PrimeModulus q;
  std::shared_ptr<const ExtField> field;
  ApproxOrSpec approx;
  SymbolEncoding encoding;
  // Nodes 0, 1, ..., L(q-1) under ExtField::from_index.
  std::shared_ptr<const InterpolationDomain> domain;

  int d() const { return encoding.d(); }
  uint32_t L() const { return approx.L(); }
  int lambda() const { return field->lambda(); }
  uint64_t max_degree() const { return approx.max_degree(); }
  // Untrimmed round-message length.
  size_t message_length() const { return max_degree() + 1; }
};

// Builds the field, approximation spec and interpolation nodes for one
// prime. Throws std::invalid_argument("field too small") when L(q-1)+1
// exceeds q^lambda.
InstanceParams make_instance(PrimeModulus q, int lambda, uint32_t L,
                             uint64_t code_seed, const SymbolEncoding& enc);

}  // namespace sipf0

#endif  // SIPF0_INSTANCE_H_
