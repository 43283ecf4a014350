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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace sipf0 {
namespace {

using Coeffs = std::vector<uint32_t>;

// Schoolbook product followed by long division; no shared code with
// ExtField::mul.
Coeffs naive_mul(const Coeffs& a, const Coeffs& b, const Coeffs& modulus,
                 uint32_t q) {
  const size_t n = modulus.size() - 1;
  std::vector<uint64_t> prod(2 * n, 0);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
  }
  for (size_t top = 2 * n - 1; top >= n; --top) {
    const uint64_t c = prod[top];
    if (c == 0) continue;
    for (size_t k = 0; k <= n; ++k) {
      const size_t pos = top - n + k;
      prod[pos] = (prod[pos] + (q - c) * modulus[k]) % q;
    }
  }
  return Coeffs(prod.begin(), prod.begin() + n);
}

Elem random_elem(const ExtField& f, std::mt19937_64& rng) {
  return f.from_index(rng() % f.order());
}

Elem random_nonzero(const ExtField& f, std::mt19937_64& rng) {
  return f.from_index(1 + rng() % (f.order() - 1));
}

TEST(PrimeModulusTest, RejectsComposites) {
  EXPECT_NO_THROW(PrimeModulus(2));
  EXPECT_NO_THROW(PrimeModulus(4093));
  EXPECT_THROW(PrimeModulus(1), std::invalid_argument);
  EXPECT_THROW(PrimeModulus(9), std::invalid_argument);
  EXPECT_EQ(PrimeModulus(2).bits(), 1);
  EXPECT_EQ(PrimeModulus(5).bits(), 3);
  EXPECT_EQ(PrimeModulus(29).bits(), 5);
}

TEST(FindIrreducibleTest, SmallCases) {
  EXPECT_EQ(find_irreducible(PrimeModulus(2), 1), (Coeffs{0, 1}));
  EXPECT_EQ(find_irreducible(PrimeModulus(2), 2), (Coeffs{1, 1, 1}));
  EXPECT_EQ(find_irreducible(PrimeModulus(3), 1), (Coeffs{0, 1}));
  // Of the two cubics over F_2, 1 + X^2 + X^3 has the smaller tuple.
  EXPECT_EQ(find_irreducible(PrimeModulus(2), 3), (Coeffs{1, 0, 1, 1}));
  // X^2 + 1 over F_3.
  EXPECT_EQ(find_irreducible(PrimeModulus(3), 2), (Coeffs{1, 0, 1}));
}

TEST(FindIrreducibleTest, IsLexicographicallySmallest) {
  // Degree 2 and 3 are irreducible iff rootless; compare against a scan.
  for (uint32_t q : {2u, 3u, 5u, 7u}) {
    for (int lambda : {2, 3}) {
      Coeffs expect;
      Coeffs f(lambda + 1, 0);
      f[lambda] = 1;
      bool found = false;
      // Ascending-coefficient tuples, constant term most significant.
      std::vector<uint32_t> digits(lambda, 0);
      while (!found) {
        for (int i = 0; i < lambda; ++i) f[i] = digits[i];
        bool root = false;
        for (uint32_t x = 0; x < q && !root; ++x) {
          uint64_t acc = 0;
          for (int i = lambda; i >= 0; --i) acc = (acc * x + f[i]) % q;
          root = acc == 0;
        }
        if (!root) {
          expect = f;
          found = true;
        }
        int pos = lambda - 1;
        while (pos >= 0 && ++digits[pos] == q) digits[pos--] = 0;
      }
      EXPECT_EQ(find_irreducible(PrimeModulus(q), lambda), expect)
          << "q=" << q << " lambda=" << lambda;
    }
  }
}

TEST(FindIrreducibleTest, RejectsReducibleModulus) {
  // X^4 + X^2 + 1 = (X^2 + X + 1)^2 over F_2 has no roots.
  EXPECT_FALSE(is_irreducible(Coeffs{1, 0, 1, 0, 1}, PrimeModulus(2)));
  EXPECT_THROW(ExtField(PrimeModulus(2), Coeffs{1, 0, 1, 0, 1}),
               std::invalid_argument);
  EXPECT_THROW(ExtField(PrimeModulus(2), Coeffs{1, 0, 1}),
               std::invalid_argument);
  EXPECT_TRUE(is_irreducible(Coeffs{1, 1, 0, 0, 1}, PrimeModulus(2)));
}

TEST(ExtFieldTest, SpecExamples) {
  ExtField f4(PrimeModulus(2), 2);
  const Elem x = f4.from_coords(Coeffs{0, 1});
  EXPECT_EQ(coords_of(ext_mul(x, x)), (Coeffs{1, 1}));
  EXPECT_EQ(ext_mul(x, f4.one()), x);

  ExtField f3(PrimeModulus(3), 1);
  EXPECT_EQ(coords_of(ext_inv(f3.from_base(2))), (Coeffs{2}));
  EXPECT_THROW(ext_inv(f3.zero()), std::domain_error);
  try {
    ext_inv(f3.zero());
  } catch (const std::domain_error& e) {
    EXPECT_STREQ(e.what(), "division by zero");
  }
}

TEST(ExtFieldTest, Identities) {
  ExtField f(PrimeModulus(5), 3);
  EXPECT_EQ(coords_of(f.zero()), (Coeffs{0, 0, 0}));
  EXPECT_EQ(coords_of(f.one()), (Coeffs{1, 0, 0}));
  EXPECT_EQ(f.from_index(0), f.zero());
  EXPECT_EQ(f.from_index(1), f.one());
  EXPECT_EQ(coords_of(f.from_index(5 * 5 * 2 + 5 * 3 + 4)), (Coeffs{4, 3, 2}));
  EXPECT_EQ(to_string(f.from_index(5 * 3 + 4)), "4,3,0");
  EXPECT_EQ(f.order(), 125u);
  EXPECT_EQ(f.element_bits(), 9);
  EXPECT_THROW(f.from_coords(Coeffs{1, 2}), std::invalid_argument);
  EXPECT_THROW(f.from_coords(Coeffs{1, 2, 5}), std::invalid_argument);
}

TEST(ExtFieldTest, LimitsAreEnforced) {
  EXPECT_THROW(ExtField(PrimeModulus(2), 0), std::invalid_argument);
  EXPECT_THROW(ExtField(PrimeModulus(2), kMaxLambda + 1),
               std::invalid_argument);
  EXPECT_THROW(ExtField(PrimeModulus(4099), 1), std::invalid_argument);
  // 4093^6 > 2^62.
  EXPECT_THROW(ExtField(PrimeModulus(4093), 6), std::invalid_argument);
}

// (q, lambda) pairs covering characteristic 2, odd primes and the
// extension degrees produced by derive_params.
class FieldAxiomTest : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(FieldAxiomTest, MulMatchesNaiveOracle) {
  const auto [q, lambda] = GetParam();
  ExtField f(PrimeModulus(q), lambda);
  std::mt19937_64 rng(q * 100 + lambda);
  for (int t = 0; t < 2000; ++t) {
    const Elem a = random_elem(f, rng);
    const Elem b = random_elem(f, rng);
    EXPECT_EQ(coords_of(f.mul(a, b)),
              naive_mul(coords_of(a), coords_of(b), f.modulus(), q));
  }
}

TEST_P(FieldAxiomTest, AxiomsOnRandomTriples) {
  const auto [q, lambda] = GetParam();
  ExtField f(PrimeModulus(q), lambda);
  std::mt19937_64 rng(q * 1000 + lambda);
  for (int t = 0; t < 10000; ++t) {
    const Elem a = random_elem(f, rng);
    const Elem b = random_elem(f, rng);
    const Elem c = random_elem(f, rng);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + (-a), f.zero());
    ASSERT_EQ(a - b, a + (-b));
    if (!a.is_zero()) ASSERT_EQ(a * ext_inv(a), f.one());
  }
}

TEST_P(FieldAxiomTest, GroupOrderAndFrobenius) {
  const auto [q, lambda] = GetParam();
  ExtField f(PrimeModulus(q), lambda);
  std::mt19937_64 rng(q * 7 + lambda);
  for (int t = 0; t < 200; ++t) {
    const Elem a = random_nonzero(f, rng);
    EXPECT_EQ(f.pow(a, f.order() - 1), f.one());
    const Elem base = f.from_base(rng() % q);
    EXPECT_EQ(f.pow(base, q), base);
    EXPECT_TRUE(f.is_base(base));
  }
  // The Frobenius map is nontrivial off the base field.
  if (lambda > 1) {
    const Elem x = f.from_index(q);
    EXPECT_NE(f.pow(x, q), x);
    EXPECT_FALSE(f.is_base(x));
  }
}

TEST_P(FieldAxiomTest, ScaleMatchesMul) {
  const auto [q, lambda] = GetParam();
  ExtField f(PrimeModulus(q), lambda);
  std::mt19937_64 rng(q + lambda);
  for (int t = 0; t < 500; ++t) {
    const Elem a = random_elem(f, rng);
    const uint32_t s = rng() % q;
    EXPECT_EQ(f.scale(a, s), f.mul(a, f.from_base(s)));
  }
}

INSTANTIATE_TEST_SUITE_P(
    Fields, FieldAxiomTest,
    ::testing::Values(std::make_tuple(2, 1), std::make_tuple(2, 2),
                      std::make_tuple(2, 14), std::make_tuple(3, 1),
                      std::make_tuple(3, 9), std::make_tuple(5, 7),
                      std::make_tuple(7, 6), std::make_tuple(13, 5),
                      std::make_tuple(29, 4), std::make_tuple(2, 24),
                      std::make_tuple(4093, 2)));

TEST(UniPolyTest, EvalExamples) {
  ExtField f(PrimeModulus(5), 1);
  const UniPoly zero(f);
  EXPECT_EQ(zero.degree(), -1);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(poly_eval(zero, f.from_base(3)), f.zero());
  const UniPoly constant(f, {f.from_base(4)});
  for (uint32_t x = 0; x < 5; ++x) {
    EXPECT_EQ(poly_eval(constant, f.from_base(x)), f.from_base(4));
  }
  const UniPoly p(f, {f.from_base(1), f.from_base(2)});
  EXPECT_EQ(poly_eval(p, f.from_base(3)), f.from_base(2));
}

TEST(UniPolyTest, TrimsTrailingZeros) {
  ExtField f(PrimeModulus(3), 2);
  const UniPoly p(f, {f.one(), f.zero(), f.zero()});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_EQ(p.padded(4).size(), 4u);
  EXPECT_EQ(p.padded(4)[0], f.one());
  EXPECT_EQ(p.padded(4)[3], f.zero());
  EXPECT_EQ(UniPoly(f, {f.zero()}).degree(), -1);
}

TEST(InterpolateTest, Examples) {
  ExtField f(PrimeModulus(5), 1);
  const Elem c = f.from_base(3);
  std::vector<std::pair<Elem, Elem>> flat = {{f.zero(), c}, {f.one(), c}};
  const UniPoly constant = poly_interpolate(flat);
  EXPECT_EQ(constant.degree(), 0);
  EXPECT_EQ(constant.coeffs()[0], c);

  std::vector<std::pair<Elem, Elem>> line = {{f.zero(), f.from_base(1)},
                                             {f.one(), f.from_base(3)}};
  const UniPoly p = poly_interpolate(line);
  ASSERT_EQ(p.degree(), 1);
  EXPECT_EQ(p.coeffs()[0], f.from_base(1));
  EXPECT_EQ(p.coeffs()[1], f.from_base(2));
}

TEST(InterpolateTest, Errors) {
  ExtField f(PrimeModulus(3), 1);
  std::vector<std::pair<Elem, Elem>> dup = {{f.one(), f.zero()},
                                            {f.one(), f.one()}};
  EXPECT_THROW(poly_interpolate(dup), std::invalid_argument);
  std::vector<std::pair<Elem, Elem>> none;
  EXPECT_THROW(poly_interpolate(none), std::invalid_argument);
}

TEST(InterpolateTest, RoundTripsWithEval) {
  // The last two exceed the single-reduction accumulator bound.
  for (auto [q, lambda] :
       {std::pair{2, 8}, std::pair{5, 3}, std::pair{13, 5}, std::pair{29, 4},
        std::pair{1021, 3}, std::pair{4093, 2}}) {
    ExtField f(PrimeModulus(q), lambda);
    std::mt19937_64 rng(q);
    for (size_t count : {1u, 2u, 5u, 40u}) {
      std::vector<std::pair<Elem, Elem>> points;
      std::vector<uint64_t> used;
      while (points.size() < count) {
        const uint64_t t = rng() % f.order();
        if (std::find(used.begin(), used.end(), t) != used.end()) continue;
        used.push_back(t);
        points.emplace_back(f.from_index(t), random_elem(f, rng));
      }
      const UniPoly p = poly_interpolate(points);
      EXPECT_LT(p.degree(), static_cast<int>(count));
      for (const auto& [x, y] : points) EXPECT_EQ(poly_eval(p, x), y);
    }
  }
}

TEST(InterpolateTest, LeftInverseOfEvaluation) {
  ExtField f(PrimeModulus(7), 6);
  std::mt19937_64 rng(11);
  std::vector<Elem> nodes;
  for (uint64_t t = 0; t < 61; ++t) nodes.push_back(f.from_index(t));
  const InterpolationDomain domain(f, nodes);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Elem> coeffs;
    for (int i = 0; i < 61; ++i) coeffs.push_back(random_elem(f, rng));
    const UniPoly p(f, coeffs);
    std::vector<Elem> values;
    for (const Elem& x : nodes) values.push_back(poly_eval(p, x));
    EXPECT_EQ(domain.interpolate(values), coeffs);
  }
}

TEST(StreamingProbeTest, Examples) {
  ExtField f(PrimeModulus(5), 1);
  const std::vector<Elem> probes = {f.zero(), f.one(), f.from_base(3)};
  EXPECT_EQ(streaming_poly_probe(f, {}, probes),
            (std::vector<Elem>{f.zero(), f.zero(), f.zero()}));
  const std::vector<Elem> single = {f.from_base(4)};
  EXPECT_EQ(streaming_poly_probe(f, single, probes),
            (std::vector<Elem>(3, f.from_base(4))));
  const std::vector<Elem> line = {f.from_base(1), f.from_base(2)};
  EXPECT_EQ(
      streaming_poly_probe(f, line, probes),
      (std::vector<Elem>{f.from_base(1), f.from_base(3), f.from_base(2)}));
}

TEST(StreamingProbeTest, MatchesPolyEval) {
  ExtField f(PrimeModulus(3), 9);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t len = rng() % 66;
    std::vector<Elem> coeffs;
    for (size_t i = 0; i < len; ++i) coeffs.push_back(random_elem(f, rng));
    std::vector<Elem> probes;
    for (int i = 0; i < 4; ++i) probes.push_back(random_elem(f, rng));
    const UniPoly p(f, coeffs);
    const auto values = streaming_poly_probe(f, coeffs, probes);
    for (size_t i = 0; i < probes.size(); ++i) {
      EXPECT_EQ(values[i], poly_eval(p, probes[i]));
    }
    StreamingProbe probe(f, probes);
    for (const Elem& c : coeffs) probe.push(c);
    EXPECT_EQ(probe.consumed(), len);
    EXPECT_EQ(probe.degree(), p.degree());
  }
}

}  // namespace
}  // namespace sipf0
