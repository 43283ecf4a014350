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

// Data-dependent algebra of the distinct-elements proof: binary encoding of
// symbols, the multilinear indicator chi~, the seeded code oracle behind the
// OR-approximating polynomial, and the verifier's B-matrix accumulator.

#ifndef SIPF0_ENCODING_H_
#define SIPF0_ENCODING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "sipf0/field.h"

namespace sipf0 {

using Symbol = uint64_t;

// Counts field work for the per-symbol cost report. Extension-field
// operations and base-field multiply-adds are each one unit.
struct FieldOpCounter {
  uint64_t ext_ops = 0;
  uint64_t base_ops = 0;
  uint64_t total() const { return ext_ops + base_ops; }
};

// Symbols 1..m map to the d-bit big-endian expansion of a-1.
class SymbolEncoding {
 public:
  // Throws std::invalid_argument when m < 2.
  explicit SymbolEncoding(uint64_t m);

  uint64_t m() const { return m_; }
  int d() const { return d_; }
  // Throws std::out_of_range unless 1 <= a <= m.
  void check(Symbol a) const;
  // Bit j (1-based, most significant first) of a-1.
  bool bit(Symbol a, int j) const { return ((a - 1) >> (d_ - j)) & 1; }
  std::vector<uint8_t> bits(Symbol a) const;

 private:
  uint64_t m_;
  int d_;
};

// ceil(log2 m) for m >= 1.
int ceil_log2(uint64_t m);

// prod_j [(2 a_j - 1) r_j + (1 - a_j)]; the indicator [bits(a) = r] on the
// Boolean cube.
Elem chi_tilde_eval(const SymbolEncoding& enc, Symbol a,
                    std::span<const Elem> r, FieldOpCounter* ops = nullptr);

// Bit-exact 64-bit mixing function keyed by (seed, q, i, k).
uint64_t prf64(uint64_t seed, uint64_t q, uint64_t i, uint64_t k);

// Pseudorandom L x infinity matrix over F_q regenerated from a seed.
class CodeOracle {
 public:
  CodeOracle(uint64_t seed, PrimeModulus q, uint32_t rows);

  uint64_t seed() const { return seed_; }
  const PrimeModulus& q() const { return q_; }
  uint32_t rows() const { return rows_; }
  // Row in [1, rows()], column k >= 1 (the stream position).
  uint32_t entry(uint32_t row, uint64_t col) const;

 private:
  uint64_t seed_;
  PrimeModulus q_;
  uint32_t rows_;
};

// Least L with (2/3)^L <= 1 / (6 m' log2 m'), m' = m rounded up to a power
// of two.
uint32_t least_rows(uint64_t m);

// p(x) = 1 - prod_i (1 - s_i^(q-1)), s_i = sum_k G[i][k] x_k.
class ApproxOrSpec {
 public:
  explicit ApproxOrSpec(CodeOracle code) : code_(code) {}

  const CodeOracle& code() const { return code_; }
  uint32_t L() const { return code_.rows(); }
  const PrimeModulus& q() const { return code_.q(); }
  // Largest degree an honest round polynomial may have: L(q-1).
  uint64_t max_degree() const { return uint64_t{L()} * (q().value() - 1); }

  // Base-field inputs x_1..x_n in [0, q); the result is 0 or 1.
  uint32_t p_eval(std::span<const uint32_t> x) const;

 private:
  CodeOracle code_;
};

inline uint32_t p_eval(const ApproxOrSpec& spec, std::span<const uint32_t> x) {
  return spec.p_eval(x);
}

// The same polynomial evaluated with extension-field inputs:
// 1 - prod_i (1 - s_i^(q-1)) with s_i = sum_k G[i][k] y_k computed in
// F_{q^lambda}. Agrees with p_eval on base-field inputs.
Elem p_tilde_eval(const ApproxOrSpec& spec, const ExtField& field,
                  std::span<const Elem> y);

// L x lambda accumulator: row i holds the coordinates of
// sum_k G[i][k] * chi~_k(r).
class BMatrix {
 public:
  BMatrix(const ExtField& field, uint32_t rows);

  uint32_t rows() const { return rows_; }
  int lambda() const { return field_->lambda(); }
  // 0-based.
  uint32_t entry(uint32_t i, int j) const { return data_[i * lambda() + j]; }
  std::span<const uint32_t> data() const { return data_; }
  Elem row_element(uint32_t i) const;

  // B[i][j] += y_k^(j) * G[i][k] for every row; k is the 1-based position.
  void update(const CodeOracle& oracle, uint64_t k, const Elem& y,
              FieldOpCounter* ops = nullptr);

  friend bool operator==(const BMatrix& a, const BMatrix& b) {
    return a.data_ == b.data_;
  }

 private:
  const ExtField* field_;
  uint32_t rows_;
  std::vector<uint32_t> data_;
};

inline void b_update(BMatrix& b, const CodeOracle& oracle, uint64_t k,
                     const Elem& y) {
  b.update(oracle, k, y);
}

// p~(chi~(r)) from the accumulated rows, evaluated in the extension field:
// 1 - prod_i (1 - S_i^(q-1)) where S_i is row i read as an element.
Elem finalize_p_of_chi(const BMatrix& b, const ApproxOrSpec& spec,
                       const ExtField& field);

// Coordinate j is 1 - prod_i (1 - B[i][j]^(q-1)) over F_q. Coincides with
// finalize_p_of_chi when lambda = 1, or when every row lies in F_q.
Elem finalize_p_of_chi_coordinatewise(const BMatrix& b,
                                      const ApproxOrSpec& spec,
                                      const ExtField& field);

// Fraction of `trials` fresh code seeds for which p(x) != OR(x).
double or_failure_probe(uint32_t L, const PrimeModulus& q,
                        std::span<const uint8_t> x, uint64_t trials,
                        uint64_t base_seed = 0);

}  // namespace sipf0

#endif  // SIPF0_ENCODING_H_
