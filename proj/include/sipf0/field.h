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

// Prime fields F_q and extension fields F_{q^lambda} in the polynomial
// basis, plus the univariate polynomial helpers shared by prover and
// verifier.

#ifndef SIPF0_FIELD_H_
#define SIPF0_FIELD_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sipf0 {

inline constexpr int kMaxLambda = 24;
// Keeps every schoolbook accumulator inside 32 bits.
inline constexpr uint32_t kMaxFieldPrime = 4096;

bool is_prime(uint64_t v);

// Division-free reduction by a fixed 32-bit modulus (Lemire et al.).
class FastMod {
 public:
  FastMod() = default;
  explicit FastMod(uint32_t d) : d_(d), m_(~uint64_t{0} / d + 1) {}

  uint32_t operator()(uint32_t a) const {
    uint64_t low = m_ * a;
    return static_cast<uint32_t>((static_cast<unsigned __int128>(low) * d_) >>
                                 64);
  }

 private:
  uint32_t d_ = 1;
  uint64_t m_ = 0;
};

class PrimeModulus {
 public:
  // Throws std::invalid_argument when q is not prime.
  explicit PrimeModulus(uint32_t q);

  uint32_t value() const { return q_; }
  // ceil(log2 q): bits needed for one residue.
  int bits() const { return bits_; }
  uint32_t reduce(uint64_t v) const { return static_cast<uint32_t>(v % q_); }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  uint32_t q_;
  int bits_;
};

class ExtField;

// Element of F_{q^lambda}: lambda base-q coordinates, ascending basis degree.
// The owning ExtField must outlive the element.
struct ExtFieldElement {
  const ExtField* ctx = nullptr;
  std::array<uint16_t, kMaxLambda> coords{};

  bool is_zero() const;
  friend bool operator==(const ExtFieldElement& a, const ExtFieldElement& b);
};

using Elem = ExtFieldElement;

// The lexicographically smallest monic irreducible polynomial of degree
// lambda over F_q, compared by the ascending coefficient tuple. The result
// has lambda+1 entries with a trailing 1.
std::vector<uint32_t> find_irreducible(const PrimeModulus& q, int lambda);

// Brute-force factor search; `monic` is ascending with a trailing 1.
bool is_irreducible(std::span<const uint32_t> monic, const PrimeModulus& q);

class ExtField {
 public:
  // Uses the canonical modulus from find_irreducible.
  ExtField(PrimeModulus q, int lambda);
  // Throws std::invalid_argument unless `modulus` is monic and irreducible.
  ExtField(PrimeModulus q, std::vector<uint32_t> modulus);

  ExtField(const ExtField&) = delete;
  ExtField& operator=(const ExtField&) = delete;

  const PrimeModulus& prime() const { return q_; }
  uint32_t q() const { return q_.value(); }
  int lambda() const { return lambda_; }
  const std::vector<uint32_t>& modulus() const { return modulus_; }
  // q^lambda.
  uint64_t order() const { return order_; }
  // Serialized size of one element.
  int element_bits() const { return lambda_ * q_.bits(); }

  Elem zero() const;
  Elem one() const;
  Elem from_base(uint64_t v) const;
  // Canonical embedding of 0..order()-1: base-q digits of t become the
  // coordinates, least significant first. 0 and 1 map to zero() and one().
  Elem from_index(uint64_t t) const;
  Elem from_coords(std::span<const uint32_t> coords) const;

  Elem add(const Elem& a, const Elem& b) const {
    Elem r{this, {}};
    for (int i = 0; i < lambda_; ++i) {
      uint32_t s = a.coords[i] + b.coords[i];
      r.coords[i] = static_cast<uint16_t>(s >= q() ? s - q() : s);
    }
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem r{this, {}};
    for (int i = 0; i < lambda_; ++i) {
      uint32_t s = a.coords[i] + q() - b.coords[i];
      r.coords[i] = static_cast<uint16_t>(s >= q() ? s - q() : s);
    }
    return r;
  }
  Elem neg(const Elem& a) const {
    Elem r{this, {}};
    for (int i = 0; i < lambda_; ++i) {
      r.coords[i] =
          static_cast<uint16_t>(a.coords[i] == 0 ? 0 : q() - a.coords[i]);
    }
    return r;
  }
  // Multiplication by a base-field scalar s in [0, q).
  Elem scale(const Elem& a, uint32_t s) const {
    Elem r{this, {}};
    for (int i = 0; i < lambda_; ++i) r.coords[i] = mod_(a.coords[i] * s);
    return r;
  }
  Elem mul(const Elem& a, const Elem& b) const;
  // Square-and-multiply.
  Elem pow(const Elem& a, uint64_t e) const;
  // a^(q^lambda - 2); throws std::domain_error("division by zero") on 0.
  Elem inv(const Elem& a) const;

  bool is_base(const Elem& a) const;
  // Coordinate 0; meaningful when is_base(a).
  uint32_t base_value(const Elem& a) const { return a.coords[0]; }

  uint32_t mod(uint32_t v) const { return mod_(v); }

 private:
  void init();

  PrimeModulus q_;
  int lambda_;
  std::vector<uint32_t> modulus_;
  uint64_t order_ = 0;
  FastMod mod_;
  // reduction_[k][c]: coefficient of X^c in X^(lambda+k) mod modulus.
  std::vector<std::array<uint16_t, kMaxLambda>> reduction_;
};

inline bool ExtFieldElement::is_zero() const {
  for (uint16_t c : coords) {
    if (c != 0) return false;
  }
  return true;
}

inline bool operator==(const ExtFieldElement& a, const ExtFieldElement& b) {
  return a.coords == b.coords;
}

inline Elem operator+(const Elem& a, const Elem& b) { return a.ctx->add(a, b); }
inline Elem operator-(const Elem& a, const Elem& b) { return a.ctx->sub(a, b); }
inline Elem operator-(const Elem& a) { return a.ctx->neg(a); }
inline Elem operator*(const Elem& a, const Elem& b) { return a.ctx->mul(a, b); }

inline Elem ext_add(const Elem& a, const Elem& b) { return a + b; }
inline Elem ext_mul(const Elem& a, const Elem& b) { return a * b; }
inline Elem ext_neg(const Elem& a) { return -a; }
inline Elem ext_inv(const Elem& a) { return a.ctx->inv(a); }

// "c0,c1,...,c_{lambda-1}".
std::string to_string(const Elem& a);
std::vector<uint32_t> coords_of(const Elem& a);

// Dense univariate polynomial over F_{q^lambda}; trailing zeros trimmed.
class UniPoly {
 public:
  explicit UniPoly(const ExtField& field) : field_(&field) {}
  UniPoly(const ExtField& field, std::vector<Elem> coeffs);

  const ExtField& field() const { return *field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Elem eval(const Elem& x) const;
  // Coefficients padded with zeros to exactly `length` entries.
  std::vector<Elem> padded(size_t length) const;

 private:
  const ExtField* field_;
  std::vector<Elem> coeffs_;
};

Elem poly_eval(const UniPoly& p, const Elem& x);

// Fixed set of distinct nodes with precomputed barycentric weights, so that
// repeated interpolation over the same nodes costs O(N^2) multiplications
// and no inversions.
class InterpolationDomain {
 public:
  // Throws std::invalid_argument on a repeated node.
  InterpolationDomain(const ExtField& field, std::vector<Elem> nodes);

  size_t size() const { return nodes_.size(); }
  const std::vector<Elem>& nodes() const { return nodes_; }
  // Coefficients (ascending, length size()) of the unique polynomial of
  // degree < size() taking values[k] at nodes()[k].
  std::vector<Elem> interpolate(std::span<const Elem> values) const;

 private:
  const ExtField* field_;
  std::vector<Elem> nodes_;
  std::vector<Elem> master_;   // prod (X - x_k), ascending, monic
  std::vector<Elem> weights_;  // 1 / prod_{l != k} (x_k - x_l)
};

UniPoly poly_interpolate(std::span<const std::pair<Elem, Elem>> points);

// Evaluates a polynomial whose coefficients arrive one at a time, lowest
// degree first, at a fixed set of probes without storing the coefficients.
class StreamingProbe {
 public:
  StreamingProbe(const ExtField& field, std::vector<Elem> probes);

  void push(const Elem& coeff);
  size_t consumed() const { return consumed_; }
  // Index of the highest nonzero coefficient seen so far, or -1.
  int64_t degree() const { return degree_; }
  const std::vector<Elem>& values() const { return acc_; }

 private:
  const ExtField* field_;
  std::vector<Elem> acc_;
  std::vector<Elem> power_;
  std::vector<Elem> probes_;
  size_t consumed_ = 0;
  int64_t degree_ = -1;
};

std::vector<Elem> streaming_poly_probe(const ExtField& field,
                                       std::span<const Elem> coeff_stream,
                                       std::span<const Elem> probes);

}  // namespace sipf0

#endif  // SIPF0_FIELD_H_
