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

// Honest round polynomials. The parallel kernel and the serial reference
// compute the same interpolant by different routes.

#include <omp.h>

#include <array>
#include <stdexcept>
#include <unordered_map>

#include "fixed_field.h"
#include "sipf0/sumcheck.h"

namespace sipf0 {

namespace {

void check_round(const InstanceParams& inst, std::span<const Elem> r_prefix,
                 int j) {
  if (j < 1 || j > inst.d()) throw std::out_of_range("round out of range");
  if (static_cast<int>(r_prefix.size()) != j - 1) {
    throw std::invalid_argument("round j needs j-1 revealed challenges");
  }
  if (inst.message_length() > inst.field->order()) {
    throw std::invalid_argument("field too small");
  }
}

template <int N>
void evaluate_nodes(const ExtField& f, const std::vector<Elem>& nodes,
                    const std::vector<Elem>& coeff, size_t groups, uint32_t L,
                    std::vector<Elem>& values) {
  const FixedField<N> ff(f);
  using V = typename FixedField<N>::V;
  std::vector<V> rows(coeff.size());
  for (size_t i = 0; i < coeff.size(); ++i) rows[i] = ff.load(coeff[i]);
  const uint64_t e = f.q() - 1;
  const int64_t num_nodes = static_cast<int64_t>(nodes.size());

#pragma omp parallel for schedule(static)
  for (int64_t t = 0; t < num_nodes; ++t) {
    const V x = ff.load(nodes[t]);
    V total{};
    for (size_t g = 0; g < groups; ++g) {
      const V* a_row = rows.data() + g * 2 * L;
      const V* c_row = a_row + L;
      V prod = ff.one();
      for (uint32_t i = 0; i < L; ++i) {
        const V z = ff.add(ff.mul(a_row[i], x), c_row[i]);
        if (FixedField<N>::is_zero(z)) continue;
        prod = ff.mul(prod, ff.one_minus(ff.pow(z, e)));
        if (FixedField<N>::is_zero(prod)) break;
      }
      total = ff.add(total, ff.one_minus(prod));
    }
    values[t] = ff.store(f, total);
  }
}

}  // namespace

UniPoly honest_round_poly(const InstanceParams& inst,
                          const SymbolWeights& weights,
                          std::span<const Elem> r_prefix, int j) {
  check_round(inst, r_prefix, j);
  const ExtField& f = *inst.field;
  const SymbolEncoding& enc = inst.encoding;
  const uint32_t L = inst.L();
  const int d = inst.d();
  const uint64_t suffix_mask = (uint64_t{1} << (d - j)) - 1;

  // For each suffix group s: S_i(X) = A_i X + C_i, flattened as
  // coeff[g * 2L + i] = A_i and coeff[g * 2L + L + i] = C_i.
  std::unordered_map<uint64_t, size_t> group_of;
  std::vector<Elem> coeff;
  for (size_t idx = 0; idx < weights.distinct(); ++idx) {
    const Symbol a = weights.symbol(idx);
    Elem prefix = f.one();
    for (int t = 1; t < j; ++t) {
      const Elem& r = r_prefix[t - 1];
      prefix = f.mul(prefix, enc.bit(a, t) ? r : f.sub(f.one(), r));
    }
    if (prefix.is_zero()) continue;
    const uint64_t key = (a - 1) & suffix_mask;
    auto [it, inserted] = group_of.try_emplace(key, group_of.size());
    if (inserted) coeff.resize(coeff.size() + 2 * L, f.zero());
    Elem* a_row = coeff.data() + it->second * 2 * L;
    Elem* c_row = a_row + L;
    const bool high = enc.bit(a, j);
    auto w = weights.weights(idx);
    for (uint32_t i = 0; i < L; ++i) {
      if (w[i] == 0) continue;
      const Elem hp = f.scale(prefix, w[i]);
      // X for bit 1, 1 - X for bit 0.
      if (high) {
        a_row[i] = f.add(a_row[i], hp);
      } else {
        a_row[i] = f.sub(a_row[i], hp);
        c_row[i] = f.add(c_row[i], hp);
      }
    }
  }

  const size_t groups = group_of.size();
  const std::vector<Elem>& nodes = inst.domain->nodes();
  std::vector<Elem> values(nodes.size(), f.zero());
  with_fixed_lambda(f.lambda(), [&]<int N>() {
    evaluate_nodes<N>(f, nodes, coeff, groups, L, values);
  });

  return UniPoly(f, inst.domain->interpolate(values));
}

UniPoly honest_round_poly_reference(std::span<const Symbol> stream,
                                    const InstanceParams& inst,
                                    std::span<const Elem> r_prefix, int j) {
  check_round(inst, r_prefix, j);
  const ExtField& f = *inst.field;
  const int d = inst.d();
  const uint64_t nodes = inst.message_length();
  const uint64_t suffixes = uint64_t{1} << (d - j);

  std::vector<Elem> point(d, f.zero());
  for (int t = 0; t < j - 1; ++t) point[t] = r_prefix[t];
  std::vector<Elem> y(stream.size(), f.zero());
  std::vector<std::pair<Elem, Elem>> samples;
  samples.reserve(nodes);
  for (uint64_t t = 0; t < nodes; ++t) {
    const Elem x = f.from_index(t);
    point[j - 1] = x;
    Elem total = f.zero();
    for (uint64_t s = 0; s < suffixes; ++s) {
      // Suffix bits x_{j+1}..x_d, most significant first.
      for (int u = j + 1; u <= d; ++u) {
        point[u - 1] = f.from_base((s >> (d - u)) & 1);
      }
      for (size_t k = 0; k < stream.size(); ++k) {
        y[k] = chi_tilde_eval(inst.encoding, stream[k], point);
      }
      total = f.add(total, p_tilde_eval(inst.approx, f, y));
    }
    samples.emplace_back(x, total);
  }
  return poly_interpolate(samples);
}

}  // namespace sipf0
