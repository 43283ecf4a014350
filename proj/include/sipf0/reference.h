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

// Brute-force oracles for tests. Nothing here calls into the encoding,
// sum-check or protocol code.

#ifndef SIPF0_REFERENCE_H_
#define SIPF0_REFERENCE_H_

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace sipf0::reference {

uint64_t brute_force_f0(std::span<const uint64_t> stream);

struct OracleResult {
  uint64_t f0 = 0;
  std::map<uint32_t, uint32_t> residues;  // q -> f0 mod q
};

OracleResult oracle_result(std::span<const uint64_t> stream,
                           std::span<const uint32_t> primes);

struct OrSums {
  // sum over x in {0,1}^d of OR(chi(x)), as an integer.
  uint64_t exact_or_sum = 0;
  uint32_t exact_mod_q = 0;
  // Same sum with OR replaced by the code polynomial p, reduced mod q.
  uint32_t p_sum = 0;
};

// Enumerates the whole cube {0,1}^d, d = ceil(log2 m), m <= 2^12. On a cube
// point the indicator vector is Boolean, so p is evaluated over F_q with
// code entries regenerated from `code_seed`.
OrSums brute_force_or_sum(std::span<const uint64_t> stream, uint64_t m,
                          uint32_t q, uint32_t L, uint64_t code_seed);

// Linear scan of [0, prod moduli); prod <= 10^7. Throws std::runtime_error
// when nothing matches.
uint64_t crt_scan_oracle(std::span<const uint64_t> residues,
                         std::span<const uint64_t> moduli);

// Same answer as the scan, visiting only candidates that already match the
// earlier residues. Usable when the modulus product is too large to scan.
uint64_t crt_sieve_oracle(std::span<const uint64_t> residues,
                          std::span<const uint64_t> moduli);

}  // namespace sipf0::reference

#endif  // SIPF0_REFERENCE_H_
