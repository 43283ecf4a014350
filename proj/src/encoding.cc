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

#include "sipf0/encoding.h"

#include <stdexcept>
#include <string>

namespace sipf0 {

int ceil_log2(uint64_t m) {
  int d = 0;
  while (d < 64 && (uint64_t{1} << d) < m) ++d;
  return d;
}

SymbolEncoding::SymbolEncoding(uint64_t m) : m_(m), d_(ceil_log2(m)) {
  if (m < 2) throw std::invalid_argument("universe size must be >= 2");
  if (d_ > 32) throw std::invalid_argument("universe size exceeds 2^32");
}

void SymbolEncoding::check(Symbol a) const {
  if (a < 1 || a > m_) {
    throw std::out_of_range("symbol " + std::to_string(a) + " outside [1, " +
                            std::to_string(m_) + "]");
  }
}

std::vector<uint8_t> SymbolEncoding::bits(Symbol a) const {
  check(a);
  std::vector<uint8_t> out(d_);
  for (int j = 1; j <= d_; ++j) out[j - 1] = bit(a, j);
  return out;
}

Elem chi_tilde_eval(const SymbolEncoding& enc, Symbol a,
                    std::span<const Elem> r, FieldOpCounter* ops) {
  enc.check(a);
  if (static_cast<int>(r.size()) != enc.d()) {
    throw std::invalid_argument("challenge point has wrong dimension");
  }
  const ExtField& f = *r.front().ctx;
  Elem acc = f.one();
  for (int j = 1; j <= enc.d(); ++j) {
    const Elem& x = r[j - 1];
    // (2b - 1) x + (1 - b): x for b = 1, 1 - x for b = 0.
    Elem factor = enc.bit(a, j) ? x : f.sub(f.one(), x);
    acc = f.mul(acc, factor);
  }
  if (ops) ops->ext_ops += 2 * static_cast<uint64_t>(enc.d());
  return acc;
}

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr uint64_t kMix1 = 0xBF58476D1CE4E5B9ULL;
constexpr uint64_t kMix2 = 0x94D049BB133111EBULL;

}  // namespace

uint64_t prf64(uint64_t seed, uint64_t q, uint64_t i, uint64_t k) {
  uint64_t z = seed ^ (q * kGolden) ^ (i * kMix1) ^ (k * kMix2);
  for (int round = 0; round < 3; ++round) {
    z += kGolden;
    z = (z ^ (z >> 30)) * kMix1;
    z = (z ^ (z >> 27)) * kMix2;
    z = z ^ (z >> 31);
  }
  return z;
}

CodeOracle::CodeOracle(uint64_t seed, PrimeModulus q, uint32_t rows)
    : seed_(seed), q_(q), rows_(rows) {
  if (rows == 0) throw std::invalid_argument("code needs at least one row");
}

uint32_t CodeOracle::entry(uint32_t row, uint64_t col) const {
  if (row < 1 || row > rows_) throw std::out_of_range("code row out of range");
  return static_cast<uint32_t>(prf64(seed_, q_.value(), row, col) % q_.value());
}

uint32_t least_rows(uint64_t m) {
  const int d = ceil_log2(m);
  const uint64_t mp = uint64_t{1} << d;
  // (2/3)^L <= 1/(6 m' d)  <=>  6 m' d 2^L <= 3^L.
  const unsigned __int128 k = static_cast<unsigned __int128>(6) * mp * d;
  unsigned __int128 pow2 = 1;
  unsigned __int128 pow3 = 1;
  uint32_t L = 0;
  do {
    ++L;
    pow2 *= 2;
    pow3 *= 3;
    if (L > 80) throw std::overflow_error("universe too large");
  } while (k * pow2 > pow3);
  return L;
}

uint32_t ApproxOrSpec::p_eval(std::span<const uint32_t> x) const {
  const uint32_t q = this->q().value();
  uint64_t prod = 1;
  for (uint32_t i = 1; i <= L(); ++i) {
    uint64_t s = 0;
    for (size_t k = 0; k < x.size(); ++k) {
      s = (s + uint64_t{code_.entry(i, k + 1)} * x[k]) % q;
    }
    // s^(q-1) is 1 for s != 0.
    if (s == 0) continue;
    prod = 0;
    break;
  }
  return static_cast<uint32_t>((1 + q - prod) % q);
}

namespace {

Elem lifted_p(const ExtField& f, std::span<const Elem> rows) {
  const uint64_t e = f.q() - 1;
  Elem prod = f.one();
  for (const Elem& s : rows) {
    prod = f.mul(prod, f.sub(f.one(), f.pow(s, e)));
  }
  return f.sub(f.one(), prod);
}

}  // namespace

Elem p_tilde_eval(const ApproxOrSpec& spec, const ExtField& field,
                  std::span<const Elem> y) {
  std::vector<Elem> rows(spec.L(), field.zero());
  for (uint32_t i = 0; i < spec.L(); ++i) {
    for (size_t k = 0; k < y.size(); ++k) {
      rows[i] = field.add(rows[i],
                          field.scale(y[k], spec.code().entry(i + 1, k + 1)));
    }
  }
  return lifted_p(field, rows);
}

BMatrix::BMatrix(const ExtField& field, uint32_t rows)
    : field_(&field),
      rows_(rows),
      data_(static_cast<size_t>(rows) * field.lambda(), 0) {}

Elem BMatrix::row_element(uint32_t i) const {
  return field_->from_coords(
      std::span<const uint32_t>(data_).subspan(i * lambda(), lambda()));
}

void BMatrix::update(const CodeOracle& oracle, uint64_t k, const Elem& y,
                     FieldOpCounter* ops) {
  const int lambda = this->lambda();
  for (uint32_t i = 0; i < rows_; ++i) {
    const uint32_t g = oracle.entry(i + 1, k);
    uint32_t* row = data_.data() + static_cast<size_t>(i) * lambda;
    for (int j = 0; j < lambda; ++j) {
      row[j] = field_->mod(row[j] + y.coords[j] * g);
    }
  }
  if (ops) ops->base_ops += static_cast<uint64_t>(rows_) * lambda;
}

Elem finalize_p_of_chi(const BMatrix& b, const ApproxOrSpec& spec,
                       const ExtField& field) {
  std::vector<Elem> rows;
  rows.reserve(spec.L());
  for (uint32_t i = 0; i < b.rows(); ++i) rows.push_back(b.row_element(i));
  return lifted_p(field, rows);
}

Elem finalize_p_of_chi_coordinatewise(const BMatrix& b,
                                      const ApproxOrSpec& spec,
                                      const ExtField& field) {
  const uint32_t q = spec.q().value();
  std::vector<uint32_t> coords(field.lambda());
  for (int j = 0; j < field.lambda(); ++j) {
    uint64_t prod = 1;
    for (uint32_t i = 0; i < b.rows(); ++i) {
      uint64_t s = b.entry(i, j);
      uint64_t pw = 1;
      for (uint32_t t = 0; t + 1 < q; ++t) pw = pw * s % q;
      prod = prod * ((1 + q - pw) % q) % q;
    }
    coords[j] = static_cast<uint32_t>((1 + q - prod) % q);
  }
  return field.from_coords(coords);
}

double or_failure_probe(uint32_t L, const PrimeModulus& q,
                        std::span<const uint8_t> x, uint64_t trials,
                        uint64_t base_seed) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  std::vector<uint32_t> input(x.begin(), x.end());
  bool any = false;
  for (uint8_t b : x) any = any || b != 0;
  const uint32_t expected = any ? 1 : 0;
  uint64_t failures = 0;
  for (uint64_t t = 0; t < trials; ++t) {
    ApproxOrSpec spec(CodeOracle(prf64(base_seed, q.value(), L, t), q, L));
    if (spec.p_eval(input) != expected) ++failures;
  }
  return static_cast<double>(failures) / static_cast<double>(trials);
}

}  // namespace sipf0
