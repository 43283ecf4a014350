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

#ifndef SIPF0_SRC_FIXED_FIELD_H_
#define SIPF0_SRC_FIXED_FIELD_H_

#include <array>
#include <cstdint>
#include <stdexcept>

#include "sipf0/field.h"

namespace sipf0 {

// Arithmetic with the extension degree fixed at compile time so the
// coordinate loops unroll. Elements are plain coordinate arrays.
template <int N>
struct FixedField {
  using V = std::array<uint32_t, N>;

  explicit FixedField(const ExtField& f) : q(f.q()), mod(f.q()) {
    // Row k: X^(N+k) mod modulus, recovered with the generic multiply.
    Elem x_pow = f.one();
    const Elem x = N > 1 ? f.from_index(f.q()) : f.zero();
    for (int k = 0; k < 2 * N - 1; ++k) {
      if (k >= N) {
        for (int c = 0; c < N; ++c) red[k - N][c] = x_pow.coords[c];
      }
      if (N > 1) x_pow = f.mul(x_pow, x);
    }
    // Single reduction per coordinate is exact while the worst-case
    // accumulator stays below 2^32.
    const uint64_t q2 = uint64_t{q} * q;
    lazy = uint64_t{N} * q2 * (1 + uint64_t{N} * q) < (uint64_t{1} << 32);
  }

  V load(const Elem& e) const {
    V v{};
    for (int c = 0; c < N; ++c) v[c] = e.coords[c];
    return v;
  }
  Elem store(const ExtField& f, const V& v) const {
    Elem e = f.zero();
    for (int c = 0; c < N; ++c) e.coords[c] = static_cast<uint16_t>(v[c]);
    return e;
  }
  static bool is_zero(const V& v) {
    for (int c = 0; c < N; ++c) {
      if (v[c] != 0) return false;
    }
    return true;
  }
  V one() const {
    V v{};
    v[0] = 1;
    return v;
  }
  V add(const V& a, const V& b) const {
    V r;
    for (int c = 0; c < N; ++c) {
      const uint32_t s = a[c] + b[c];
      r[c] = s >= q ? s - q : s;
    }
    return r;
  }
  // 1 - a.
  V one_minus(const V& a) const {
    V r;
    for (int c = 0; c < N; ++c) r[c] = a[c] == 0 ? 0 : q - a[c];
    r[0] = r[0] + 1 >= q ? r[0] + 1 - q : r[0] + 1;
    return r;
  }
  V mul(const V& a, const V& b) const {
    uint32_t prod[2 * N - 1] = {};
    for (int i = 0; i < N; ++i) {
      for (int j = 0; j < N; ++j) prod[i + j] += a[i] * b[j];
    }
    V r;
    if constexpr (N == 1) {
      r[0] = mod(prod[0]);
    } else {
      if (!lazy) {
        for (int k = N; k < 2 * N - 1; ++k) prod[k] = mod(prod[k]);
      }
      for (int c = 0; c < N; ++c) {
        uint32_t acc = prod[c];
        for (int k = 0; k < N - 1; ++k) acc += prod[N + k] * red[k][c];
        r[c] = lazy ? mod(acc) : mod(mod(acc));
      }
    }
    return r;
  }
  V pow(V base, uint64_t e) const {
    V result{};
    bool started = false;
    while (true) {
      if (e & 1) {
        result = started ? mul(result, base) : base;
        started = true;
      }
      e >>= 1;
      if (e == 0) break;
      base = mul(base, base);
    }
    return started ? result : one();
  }

  uint32_t q;
  FastMod mod;
  uint32_t red[N > 1 ? N - 1 : 1][N] = {};
  bool lazy = true;
};

namespace internal {

template <int N, typename Fn>
void with_fixed_lambda_from(int lambda, Fn&& fn) {
  if constexpr (N > kMaxLambda) {
    throw std::invalid_argument("lambda out of range");
  } else {
    if (lambda == N) {
      fn.template operator()<N>();
    } else {
      with_fixed_lambda_from<N + 1>(lambda, fn);
    }
  }
}

}  // namespace internal

// Calls fn.template operator()<lambda>().
template <typename Fn>
void with_fixed_lambda(int lambda, Fn&& fn) {
  internal::with_fixed_lambda_from<1>(lambda, fn);
}

}  // namespace sipf0

#endif  // SIPF0_SRC_FIXED_FIELD_H_
