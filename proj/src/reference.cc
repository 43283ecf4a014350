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

#include "sipf0/reference.h"

#include <set>
#include <stdexcept>

namespace sipf0::reference {

namespace {

// Independent copy of the code-entry generator.
uint64_t mix(uint64_t seed, uint64_t q, uint64_t i, uint64_t k) {
  uint64_t z = seed ^ (q * 0x9E3779B97F4A7C15ULL) ^
               (i * 0xBF58476D1CE4E5B9ULL) ^ (k * 0x94D049BB133111EBULL);
  for (int round = 0; round < 3; ++round) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
  }
  return z;
}

uint64_t power_mod(uint64_t b, uint64_t e, uint64_t q) {
  uint64_t r = 1 % q;
  for (uint64_t i = 0; i < e; ++i) r = r * b % q;
  return r;
}

}  // namespace

uint64_t brute_force_f0(std::span<const uint64_t> stream) {
  return std::set<uint64_t>(stream.begin(), stream.end()).size();
}

OracleResult oracle_result(std::span<const uint64_t> stream,
                           std::span<const uint32_t> primes) {
  OracleResult out;
  out.f0 = brute_force_f0(stream);
  for (uint32_t q : primes) out.residues[q] = static_cast<uint32_t>(out.f0 % q);
  return out;
}

OrSums brute_force_or_sum(std::span<const uint64_t> stream, uint64_t m,
                          uint32_t q, uint32_t L, uint64_t code_seed) {
  if (m > 4096) throw std::invalid_argument("oracle limited to m <= 4096");
  int d = 0;
  while ((uint64_t{1} << d) < m) ++d;
  OrSums out;
  uint64_t p_sum = 0;
  for (uint64_t x = 0; x < (uint64_t{1} << d); ++x) {
    // chi_k(x) = 1 iff a_k - 1 == x.
    bool any = false;
    uint64_t prod = 1;
    for (uint32_t i = 1; i <= L; ++i) {
      uint64_t s = 0;
      for (size_t k = 0; k < stream.size(); ++k) {
        if (stream[k] - 1 != x) continue;
        any = true;
        s = (s + mix(code_seed, q, i, k + 1) % q) % q;
      }
      prod = prod * ((1 + q - power_mod(s, q - 1, q)) % q) % q;
    }
    if (any) ++out.exact_or_sum;
    p_sum = (p_sum + 1 + q - prod) % q;
  }
  out.exact_mod_q = static_cast<uint32_t>(out.exact_or_sum % q);
  out.p_sum = static_cast<uint32_t>(p_sum);
  return out;
}

uint64_t crt_scan_oracle(std::span<const uint64_t> residues,
                         std::span<const uint64_t> moduli) {
  if (residues.size() != moduli.size()) {
    throw std::invalid_argument("residue/modulus count mismatch");
  }
  uint64_t product = 1;
  for (uint64_t q : moduli) product *= q;
  if (product > 10'000'000) throw std::invalid_argument("scan bound exceeded");
  for (uint64_t v = 0; v < product; ++v) {
    bool match = true;
    for (size_t i = 0; i < moduli.size() && match; ++i) {
      match = v % moduli[i] == residues[i];
    }
    if (match) return v;
  }
  throw std::runtime_error("no value matches the residues");
}

uint64_t crt_sieve_oracle(std::span<const uint64_t> residues,
                          std::span<const uint64_t> moduli) {
  if (residues.size() != moduli.size()) {
    throw std::invalid_argument("residue/modulus count mismatch");
  }
  uint64_t v = 0;
  uint64_t step = 1;
  for (size_t i = 0; i < moduli.size(); ++i) {
    const uint64_t q = moduli[i];
    uint64_t tries = 0;
    while (v % q != residues[i]) {
      if (++tries >= q)
        throw std::runtime_error("no value matches the residues");
      v += step;
    }
    if (step > ~uint64_t{0} / q) throw std::overflow_error("product too large");
    step *= q;
  }
  return v;
}

}  // namespace sipf0::reference
