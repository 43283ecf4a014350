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

#include "sipf0/field.h"

#include <algorithm>
#include <stdexcept>

#include "fixed_field.h"

namespace sipf0 {

bool is_prime(uint64_t v) {
  if (v < 2) return false;
  for (uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(uint32_t q) : q_(q), bits_(0) {
  if (!is_prime(q)) {
    throw std::invalid_argument("modulus " + std::to_string(q) +
                                " is not prime");
  }
  while ((uint64_t{1} << bits_) < q) ++bits_;
}

namespace {

using Coeffs = std::vector<uint32_t>;

// Remainder of a by monic b over F_q; both ascending.
Coeffs poly_mod(Coeffs a, const Coeffs& b, uint32_t q) {
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    uint32_t lead = a.back();
    if (lead != 0) {
      size_t shift = a.size() - 1 - db;
      for (size_t i = 0; i < db; ++i) {
        a[shift + i] = static_cast<uint32_t>(
            (a[shift + i] + uint64_t{q - lead} * b[i]) % q);
      }
    }
    a.pop_back();
  }
  return a;
}

bool all_zero(const Coeffs& a) {
  return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

}  // namespace

bool is_irreducible(std::span<const uint32_t> monic, const PrimeModulus& q) {
  const uint32_t p = q.value();
  if (monic.size() < 2 || monic.back() != 1) {
    throw std::invalid_argument("polynomial must be monic of degree >= 1");
  }
  const int degree = static_cast<int>(monic.size()) - 1;
  if (degree == 1) return true;
  Coeffs f(monic.begin(), monic.end());

  // Roots.
  for (uint32_t x = 0; x < p; ++x) {
    uint64_t acc = 0;
    for (int i = degree; i >= 0; --i) acc = (acc * x + f[i]) % p;
    if (acc == 0) return false;
  }
  // Monic factors of degree 2..degree/2.
  for (int k = 2; k <= degree / 2; ++k) {
    Coeffs g(k + 1, 0);
    g[k] = 1;
    while (true) {
      if (all_zero(poly_mod(f, g, p))) return false;
      int pos = 0;
      while (pos < k && ++g[pos] == p) g[pos++] = 0;
      if (pos == k) break;
    }
  }
  return true;
}

std::vector<uint32_t> find_irreducible(const PrimeModulus& q, int lambda) {
  if (lambda < 1) throw std::invalid_argument("lambda must be >= 1");
  const uint32_t p = q.value();
  // digits[0] is the most significant position of the lexicographic order,
  // i.e. the constant coefficient.
  Coeffs f(lambda + 1, 0);
  f[lambda] = 1;
  while (true) {
    if (is_irreducible(f, q)) return f;
    int pos = lambda - 1;
    while (pos >= 0 && ++f[pos] == p) f[pos--] = 0;
    if (pos < 0) break;
  }
  throw std::logic_error("no irreducible polynomial found");
}

namespace {

// q^lambda, after checking the representation limits.
uint64_t check_size(const PrimeModulus& q, int lambda) {
  if (q.value() >= kMaxFieldPrime) {
    throw std::invalid_argument("prime too large");
  }
  uint64_t order = 1;
  for (int i = 0; i < lambda; ++i) {
    if (order > (uint64_t{1} << 62) / q.value()) {
      throw std::invalid_argument("field order exceeds 2^62");
    }
    order *= q.value();
  }
  return order;
}

}  // namespace

ExtField::ExtField(PrimeModulus q, int lambda) : q_(q), lambda_(lambda) {
  if (lambda < 1 || lambda > kMaxLambda) {
    throw std::invalid_argument("lambda out of range");
  }
  check_size(q, lambda);
  modulus_ = find_irreducible(q, lambda);
  init();
}

ExtField::ExtField(PrimeModulus q, std::vector<uint32_t> modulus)
    : q_(q),
      lambda_(static_cast<int>(modulus.size()) - 1),
      modulus_(std::move(modulus)) {
  if (lambda_ < 1 || lambda_ > kMaxLambda) {
    throw std::invalid_argument("lambda out of range");
  }
  for (uint32_t c : modulus_) {
    if (c >= q.value()) throw std::invalid_argument("coefficient out of range");
  }
  if (!is_irreducible(modulus_, q)) {
    throw std::invalid_argument("modulus is not irreducible");
  }
  init();
}

void ExtField::init() {
  order_ = check_size(q_, lambda_);
  mod_ = FastMod(q());
  // X^lambda = -(f_0 + ... + f_{lambda-1} X^{lambda-1}).
  reduction_.assign(std::max(lambda_ - 1, 0), {});
  std::array<uint16_t, kMaxLambda> cur{};
  for (int c = 0; c < lambda_; ++c) {
    cur[c] = static_cast<uint16_t>(modulus_[c] == 0 ? 0 : q() - modulus_[c]);
  }
  for (int k = 0; k + 1 < lambda_; ++k) {
    reduction_[k] = cur;
    // cur <- X * cur mod f
    uint32_t top = cur[lambda_ - 1];
    std::array<uint16_t, kMaxLambda> next{};
    for (int c = lambda_ - 1; c >= 1; --c) next[c] = cur[c - 1];
    for (int c = 0; c < lambda_; ++c) {
      uint32_t red = modulus_[c] == 0 ? 0 : q() - modulus_[c];
      next[c] = static_cast<uint16_t>(mod_(next[c] + top * red));
    }
    cur = next;
  }
}

Elem ExtField::zero() const { return Elem{this, {}}; }

Elem ExtField::one() const {
  Elem r{this, {}};
  r.coords[0] = 1;
  return r;
}

Elem ExtField::from_base(uint64_t v) const {
  Elem r{this, {}};
  r.coords[0] = static_cast<uint16_t>(v % q());
  return r;
}

Elem ExtField::from_index(uint64_t t) const {
  if (t >= order_) throw std::out_of_range("embedding index out of range");
  Elem r{this, {}};
  for (int i = 0; i < lambda_; ++i) {
    r.coords[i] = static_cast<uint16_t>(t % q());
    t /= q();
  }
  return r;
}

Elem ExtField::from_coords(std::span<const uint32_t> coords) const {
  if (static_cast<int>(coords.size()) != lambda_) {
    throw std::invalid_argument("expected " + std::to_string(lambda_) +
                                " coordinates");
  }
  Elem r{this, {}};
  for (int i = 0; i < lambda_; ++i) {
    if (coords[i] >= q())
      throw std::invalid_argument("coordinate out of range");
    r.coords[i] = static_cast<uint16_t>(coords[i]);
  }
  return r;
}

Elem ExtField::mul(const Elem& a, const Elem& b) const {
  const int n = lambda_;
  if (n == 1) {
    Elem r{this, {}};
    r.coords[0] =
        static_cast<uint16_t>(mod_(uint32_t{a.coords[0]} * b.coords[0]));
    return r;
  }
  uint32_t prod[2 * kMaxLambda - 1] = {};
  for (int i = 0; i < n; ++i) {
    const uint32_t ai = a.coords[i];
    if (ai == 0) continue;
    for (int j = 0; j < n; ++j) prod[i + j] += ai * b.coords[j];
  }
  uint32_t acc[kMaxLambda];
  for (int c = 0; c < n; ++c) acc[c] = prod[c];
  for (int k = 0; k + 1 < n; ++k) {
    const uint32_t h = mod_(prod[n + k]);
    if (h == 0) continue;
    const auto& red = reduction_[k];
    for (int c = 0; c < n; ++c) acc[c] += h * red[c];
  }
  Elem r{this, {}};
  for (int c = 0; c < n; ++c) r.coords[c] = static_cast<uint16_t>(mod_(acc[c]));
  return r;
}

Elem ExtField::pow(const Elem& a, uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

Elem ExtField::inv(const Elem& a) const {
  if (a.is_zero()) throw std::domain_error("division by zero");
  return pow(a, order_ - 2);
}

bool ExtField::is_base(const Elem& a) const {
  for (int i = 1; i < lambda_; ++i) {
    if (a.coords[i] != 0) return false;
  }
  return true;
}

std::string to_string(const Elem& a) {
  std::string out;
  const int n = a.ctx ? a.ctx->lambda() : 0;
  for (int i = 0; i < n; ++i) {
    if (i) out += ',';
    out += std::to_string(a.coords[i]);
  }
  return out;
}

std::vector<uint32_t> coords_of(const Elem& a) {
  return std::vector<uint32_t>(a.coords.begin(),
                               a.coords.begin() + a.ctx->lambda());
}

UniPoly::UniPoly(const ExtField& field, std::vector<Elem> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Elem UniPoly::eval(const Elem& x) const {
  Elem acc = field_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_->add(field_->mul(acc, x), *it);
  }
  return acc;
}

std::vector<Elem> UniPoly::padded(size_t length) const {
  if (coeffs_.size() > length) {
    throw std::invalid_argument("polynomial longer than requested length");
  }
  std::vector<Elem> out = coeffs_;
  out.resize(length, field_->zero());
  return out;
}

Elem poly_eval(const UniPoly& p, const Elem& x) { return p.eval(x); }

InterpolationDomain::InterpolationDomain(const ExtField& field,
                                         std::vector<Elem> nodes)
    : field_(&field), nodes_(std::move(nodes)) {
  const ExtField& f = *field_;
  const size_t n = nodes_.size();
  master_.assign(1, f.one());
  for (const Elem& x : nodes_) {
    // master *= (X - x)
    master_.push_back(f.zero());
    for (size_t i = master_.size() - 1; i > 0; --i) {
      master_[i] = f.sub(master_[i - 1], f.mul(master_[i], x));
    }
    master_[0] = f.neg(f.mul(master_[0], x));
  }
  // w_k = 1 / M'(x_k).
  std::vector<Elem> deriv(n, f.zero());
  for (size_t i = 1; i <= n; ++i) {
    deriv[i - 1] = f.scale(master_[i], f.mod(static_cast<uint32_t>(i % f.q())));
  }
  UniPoly dpoly(f, deriv);
  weights_.reserve(n);
  for (const Elem& x : nodes_) {
    Elem denom = dpoly.eval(x);
    if (denom.is_zero()) {
      throw std::invalid_argument("interpolation nodes must be distinct");
    }
    weights_.push_back(f.inv(denom));
  }
}

std::vector<Elem> InterpolationDomain::interpolate(
    std::span<const Elem> values) const {
  const ExtField& f = *field_;
  const size_t n = nodes_.size();
  if (values.size() != n) throw std::invalid_argument("value count mismatch");
  std::vector<Elem> out(n, f.zero());
  with_fixed_lambda(f.lambda(), [&]<int N>() {
    const FixedField<N> ff(f);
    using V = typename FixedField<N>::V;
    std::vector<V> master(n + 1);
    for (size_t i = 0; i <= n; ++i) master[i] = ff.load(master_[i]);
    std::vector<V> acc(n, V{});
    std::vector<V> quotient(n);
    for (size_t k = 0; k < n; ++k) {
      const V c = ff.mul(ff.load(values[k]), ff.load(weights_[k]));
      if (FixedField<N>::is_zero(c)) continue;
      const V x = ff.load(nodes_[k]);
      // master / (X - x_k) by synthetic division.
      quotient[n - 1] = master[n];
      for (size_t i = n - 1; i > 0; --i) {
        quotient[i - 1] = ff.add(master[i], ff.mul(x, quotient[i]));
      }
      for (size_t i = 0; i < n; ++i) {
        acc[i] = ff.add(acc[i], ff.mul(c, quotient[i]));
      }
    }
    for (size_t i = 0; i < n; ++i) out[i] = ff.store(f, acc[i]);
  });
  return out;
}

UniPoly poly_interpolate(std::span<const std::pair<Elem, Elem>> points) {
  if (points.empty()) {
    throw std::invalid_argument("interpolation needs at least one point");
  }
  const ExtField& f = *points.front().first.ctx;
  if (points.size() > f.order()) {
    throw std::invalid_argument("more points than field elements");
  }
  std::vector<Elem> xs;
  std::vector<Elem> ys;
  for (const auto& [x, y] : points) {
    xs.push_back(x);
    ys.push_back(y);
  }
  InterpolationDomain domain(f, std::move(xs));
  return UniPoly(f, domain.interpolate(ys));
}

StreamingProbe::StreamingProbe(const ExtField& field, std::vector<Elem> probes)
    : field_(&field),
      acc_(probes.size(), field.zero()),
      power_(probes.size(), field.one()),
      probes_(std::move(probes)) {}

void StreamingProbe::push(const Elem& coeff) {
  for (size_t i = 0; i < probes_.size(); ++i) {
    acc_[i] = field_->add(acc_[i], field_->mul(coeff, power_[i]));
    power_[i] = field_->mul(power_[i], probes_[i]);
  }
  if (!coeff.is_zero()) degree_ = static_cast<int64_t>(consumed_);
  ++consumed_;
}

std::vector<Elem> streaming_poly_probe(const ExtField& field,
                                       std::span<const Elem> coeff_stream,
                                       std::span<const Elem> probes) {
  StreamingProbe probe(field, std::vector<Elem>(probes.begin(), probes.end()));
  for (const Elem& c : coeff_stream) probe.push(c);
  return probe.values();
}

}  // namespace sipf0
