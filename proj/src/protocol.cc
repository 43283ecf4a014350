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

#include "sipf0/protocol.h"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace sipf0 {

namespace {

// Domain tags separating the streams derived from the master seed.
constexpr uint64_t kCodeTag = 0x636f64655f736565ULL;       // "code_see"
constexpr uint64_t kChallengeTag = 0x6368616c6c656e67ULL;  // "challeng"
constexpr uint64_t kRepeatTag = 0x7265706561745f5fULL;     // "repeat__"

constexpr size_t kIngestChunk = 1024;

}  // namespace

std::vector<uint32_t> first_primes(size_t count) {
  std::vector<uint32_t> out;
  size_t limit = 16;
  while (out.size() < count) {
    limit *= 2;
    std::vector<bool> composite(limit + 1, false);
    out.clear();
    for (size_t p = 2; p <= limit && out.size() < count; ++p) {
      if (composite[p]) continue;
      out.push_back(static_cast<uint32_t>(p));
      for (size_t mult = p * p; mult <= limit; mult += p)
        composite[mult] = true;
    }
  }
  return out;
}

int smallest_lambda(uint32_t q, uint32_t L, int d, int log2m) {
  const uint64_t target = uint64_t{6} * L * d * log2m;
  int lambda = 1;
  uint64_t power = 1;  // q^(lambda-1)
  while (power < target) {
    power *= q;
    ++lambda;
  }
  return lambda;
}

Setup derive_params(uint64_t m, uint64_t seed) {
  if (m < 2) throw std::invalid_argument("universe size must be >= 2");
  SymbolEncoding enc(m);
  ProtocolParams params;
  params.m = m;
  params.d = enc.d();
  params.L = least_rows(m);
  params.seed = seed;
  params.code_seed = prf64(seed, kCodeTag, 0, 0);

  // First d primes, extended while their product does not exceed m.
  size_t count = params.d;
  while (true) {
    params.primes = first_primes(count);
    unsigned __int128 product = 1;
    for (uint32_t q : params.primes) product *= q;
    if (product > m) break;
    ++count;
  }
  const double d = params.d;
  const double bound = 2.0 * d * std::log2(d) + 2.0;
  params.primes_within_bound =
      *std::max_element(params.primes.begin(), params.primes.end()) <= bound;

  Setup setup;
  for (uint32_t q : params.primes) {
    const int lambda = smallest_lambda(q, params.L, params.d, params.d);
    setup.instances.push_back(make_instance(PrimeModulus(q), lambda, params.L,
                                            params.code_seed, enc));
  }
  setup.params = std::move(params);
  return setup;
}

std::vector<Elem> draw_challenges(const InstanceParams& inst, uint64_t seed) {
  const ExtField& f = *inst.field;
  const uint64_t key = seed ^ kChallengeTag;
  std::vector<Elem> r;
  r.reserve(inst.d());
  std::vector<uint32_t> coords(f.lambda());
  for (int j = 1; j <= inst.d(); ++j) {
    for (int c = 0; c < f.lambda(); ++c) {
      coords[c] = static_cast<uint32_t>(prf64(key, f.q(), j, c) % f.q());
    }
    r.push_back(f.from_coords(coords));
  }
  return r;
}

VerifierStreamState::VerifierStreamState(const Setup& setup) : setup_(&setup) {
  for (const InstanceParams& inst : setup.instances) {
    b_.emplace_back(*inst.field, inst.L());
    r_.push_back(draw_challenges(inst, setup.params.seed));
  }
}

uint64_t VerifierStreamState::ingest_one(size_t inst, Symbol a, uint64_t k) {
  const InstanceParams& p = setup_->instances[inst];
  FieldOpCounter ops;
  const Elem y = chi_tilde_eval(p.encoding, a, r_[inst], &ops);
  b_[inst].update(p.approx.code(), k, y, &ops);
  return ops.total();
}

void VerifierStreamState::ingest(Symbol a) {
  const SymbolEncoding enc(setup_->params.m);
  enc.check(a);
  const uint64_t k = n_ + 1;
  for (size_t i = 0; i < b_.size(); ++i) total_ops_ += ingest_one(i, a, k);
  n_ = k;
}

void VerifierStreamState::ingest_batch(std::span<const Symbol> symbols) {
  const SymbolEncoding enc(setup_->params.m);
  for (Symbol a : symbols) enc.check(a);
  const int64_t count = static_cast<int64_t>(b_.size());
  uint64_t ops = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : ops)
  for (int64_t i = 0; i < count; ++i) {
    for (size_t pos = 0; pos < symbols.size(); ++pos) {
      ops += ingest_one(static_cast<size_t>(i), symbols[pos], n_ + 1 + pos);
    }
  }
  total_ops_ += ops;
  n_ += symbols.size();
}

std::vector<Elem> VerifierStreamState::finalize() const {
  std::vector<Elem> out;
  for (size_t i = 0; i < b_.size(); ++i) {
    const InstanceParams& p = setup_->instances[i];
    out.push_back(finalize_p_of_chi(b_[i], p.approx, *p.field));
  }
  return out;
}

uint64_t VerifierStreamState::state_bits() const {
  uint64_t bits = 64;  // code seed
  for (size_t i = 0; i < b_.size(); ++i) {
    const InstanceParams& p = setup_->instances[i];
    const uint64_t coordinates =
        b_[i].data().size() + r_[i].size() * static_cast<uint64_t>(p.lambda());
    bits += coordinates * p.q.bits();
  }
  return bits;
}

uint64_t VerifierStreamState::per_symbol_field_ops() const {
  if (n_ > 0) return total_ops_ / n_;
  // Dry run on a scratch copy.
  VerifierStreamState scratch = *this;
  scratch.ingest(1);
  return scratch.total_ops_;
}

void HonestProver::begin(std::span<const InstanceParams> instances) {
  instances_ = instances;
  stream_.clear();
  weights_.clear();
  revealed_.assign(instances.size(), {});
  for (const InstanceParams& inst : instances) weights_.emplace_back(inst);
}

void HonestProver::observe(Symbol a) {
  stream_.push_back(a);
  const uint64_t k = stream_.size();
  for (SymbolWeights& w : weights_) w.observe(a, k);
}

void HonestProver::reveal(size_t inst, const Elem& r) {
  revealed_[inst].push_back(r);
}

UniPoly HonestProver::honest_poly(size_t inst, int j) const {
  const auto prefix = std::span<const Elem>(revealed_[inst]).first(j - 1);
  if (use_reference_) {
    return honest_round_poly_reference(stream_, instances_[inst], prefix, j);
  }
  return honest_round_poly(instances_[inst], weights_[inst], prefix, j);
}

RoundMessage HonestProver::round_message(size_t inst, int j) {
  const UniPoly g = honest_poly(inst, j);
  return RoundMessage{j, g.padded(instances_[inst].message_length())};
}

uint64_t crt_recombine(
    std::span<const std::pair<uint64_t, uint64_t>> residues) {
  using u128 = unsigned __int128;
  uint64_t x = 0;
  uint64_t modulus = 1;
  for (const auto& [r, q] : residues) {
    if (q == 0) throw std::invalid_argument("modulus must be positive");
    if (q > (uint64_t{1} << 62)) throw std::overflow_error("modulus too large");
    if (r >= q) throw std::invalid_argument("residue out of range");
    if (std::gcd(modulus, q) != 1) {
      throw std::invalid_argument("moduli are not pairwise coprime");
    }
    if (static_cast<u128>(modulus) * q > ~uint64_t{0}) {
      throw std::overflow_error("modulus product exceeds 64 bits");
    }
    // Inverse of modulus mod q by extended Euclid.
    int64_t old_r = static_cast<int64_t>(modulus % q),
            cur_r = static_cast<int64_t>(q);
    int64_t old_s = 1, cur_s = 0;
    while (cur_r != 0) {
      const int64_t quot = old_r / cur_r;
      std::tie(old_r, cur_r) = std::make_pair(cur_r, old_r - quot * cur_r);
      std::tie(old_s, cur_s) = std::make_pair(cur_s, old_s - quot * cur_s);
    }
    const uint64_t inv = static_cast<uint64_t>(
        (old_s % static_cast<int64_t>(q) + static_cast<int64_t>(q)) %
        static_cast<int64_t>(q));
    const uint64_t diff = (r + q - x % q) % q;
    const uint64_t t = static_cast<uint64_t>(static_cast<u128>(diff) * inv % q);
    x += modulus * t;
    modulus *= q;
  }
  return x;
}

Transcript run_interaction(std::span<const Symbol> stream, const Setup& setup,
                           Prover& prover) {
  const ProtocolParams& params = setup.params;
  const size_t count = setup.instances.size();

  Transcript t;
  t.m = params.m;
  t.n = stream.size();
  t.d = params.d;
  t.seed = params.seed;
  t.code_seed = params.code_seed;

  // The code seed goes to the prover before the stream.
  VerifierStreamState verifier(setup);
  prover.begin(setup.instances);
  t.comm_bits += 64;

  for (size_t start = 0; start < stream.size(); start += kIngestChunk) {
    const auto chunk =
        stream.subspan(start, std::min(kIngestChunk, stream.size() - start));
    verifier.ingest_batch(chunk);
    for (Symbol a : chunk) prover.observe(a);
  }
  const std::vector<Elem> streamed = verifier.finalize();

  std::vector<RoundContext> ctx;
  std::vector<bool> active(count, true);
  t.instances.resize(count);
  for (size_t i = 0; i < count; ++i) {
    const InstanceParams& inst = setup.instances[i];
    ctx.push_back(begin_rounds(inst));
    InstanceRecord& rec = t.instances[i];
    rec.field = inst.field;
    rec.q = inst.q.value();
    rec.lambda = inst.lambda();
    rec.L = inst.L();
    rec.challenges = verifier.challenges(i);
    rec.streamed_value = streamed[i];
  }

  for (int j = 1; j <= params.d; ++j) {
    if (std::none_of(active.begin(), active.end(), [](bool b) { return b; })) {
      break;
    }
    t.rounds = j;
    for (size_t i = 0; i < count; ++i) {
      if (!active[i]) continue;
      const InstanceParams& inst = setup.instances[i];
      const auto& r = verifier.challenges(i);
      if (j >= 2) {
        prover.reveal(i, r[j - 2]);
        t.comm_bits += inst.field->element_bits();
      }
      RoundMessage msg = prover.round_message(i, j);
      t.comm_bits += msg.coeffs.size() * inst.field->element_bits();
      const auto reason = verifier_round_check(ctx[i], msg, r[j - 1]);
      t.instances[i].rounds.push_back(std::move(msg));
      if (reason) {
        t.instances[i].reason = reason;
        active[i] = false;
      }
    }
  }

  std::vector<std::pair<uint64_t, uint64_t>> residues;
  for (size_t i = 0; i < count; ++i) {
    InstanceRecord& rec = t.instances[i];
    const ExtField& f = *setup.instances[i].field;
    rec.residue = f.base_value(ctx[i].claimed_residue);
    rec.residue_in_base = f.is_base(ctx[i].claimed_residue);
    if (active[i]) {
      if (auto reason = verifier_final_check(ctx[i], streamed[i])) {
        rec.reason = reason;
      } else if (!rec.residue_in_base) {
        rec.reason = RejectReason::kNonBaseResidue;
      }
    }
    rec.accepted = !rec.reason.has_value();
    residues.emplace_back(rec.residue, rec.q);
  }

  t.verifier_state_bits = verifier.state_bits();
  t.per_symbol_field_ops = verifier.per_symbol_field_ops();

  const auto rejected =
      std::find_if(t.instances.begin(), t.instances.end(),
                   [](const InstanceRecord& r) { return !r.accepted; });
  if (rejected != t.instances.end()) {
    t.reject_reason = std::string(to_string(*rejected->reason));
    return t;
  }
  const uint64_t value = crt_recombine(residues);
  if (value > std::min<uint64_t>(params.m, t.n)) {
    t.reject_reason = "f0-out-of-range";
    return t;
  }
  t.f0 = value;
  t.accepted = true;
  return t;
}

AccountingReport accounting_report(const Transcript& t) {
  return AccountingReport{t.comm_bits, t.verifier_state_bits, t.rounds,
                          t.per_symbol_field_ops};
}

nlohmann::json to_json(const Transcript& t) {
  using nlohmann::json;
  json instances = json::array();
  for (const InstanceRecord& rec : t.instances) {
    json rounds = json::array();
    for (const RoundMessage& msg : rec.rounds) {
      json coeffs = json::array();
      for (const Elem& c : msg.coeffs) coeffs.push_back(coords_of(c));
      rounds.push_back({{"j", msg.round}, {"coeffs", std::move(coeffs)}});
    }
    json challenges = json::array();
    for (const Elem& r : rec.challenges) challenges.push_back(coords_of(r));
    json reason =
        rec.reason ? json(std::string(to_string(*rec.reason))) : json(nullptr);
    instances.push_back({{"q", rec.q},
                         {"lambda", rec.lambda},
                         {"L", rec.L},
                         {"residue", rec.residue},
                         {"accepted", rec.accepted},
                         {"reason", std::move(reason)},
                         {"rounds", std::move(rounds)},
                         {"challenges", std::move(challenges)}});
  }
  return json{{"m", t.m},
              {"n", t.n},
              {"d", t.d},
              {"seed", t.seed},
              {"instances", std::move(instances)},
              {"f0", t.f0 ? json(*t.f0) : json(nullptr)},
              {"verdict", t.accepted ? "accept" : "reject"},
              {"comm_bits", t.comm_bits},
              {"verifier_state_bits", t.verifier_state_bits},
              {"per_symbol_field_ops", t.per_symbol_field_ops}};
}

nlohmann::json to_json(const AccountingReport& r) {
  return nlohmann::json{{"comm_bits", r.comm_bits},
                        {"verifier_state_bits", r.verifier_state_bits},
                        {"rounds", r.rounds},
                        {"per_symbol_field_ops", r.per_symbol_field_ops}};
}

uint64_t repetition_seed(uint64_t seed, int index) {
  if (index == 0) return seed;
  return prf64(seed, kRepeatTag, static_cast<uint64_t>(index), 0);
}

RepeatedResult run_repeated(std::span<const Symbol> stream, uint64_t m,
                            uint64_t seed, int repeat,
                            const ProverFactory& make_prover) {
  if (repeat < 1) throw std::invalid_argument("repeat must be >= 1");
  RepeatedResult result;
  std::map<uint64_t, int> votes;
  for (int i = 0; i < repeat; ++i) {
    const Setup setup = derive_params(m, repetition_seed(seed, i));
    auto prover = make_prover();
    Transcript t = run_interaction(stream, setup, *prover);
    if (t.accepted) {
      ++result.accepted_runs;
      ++votes[*t.f0];
    }
    result.transcripts.push_back(std::move(t));
  }
  for (const auto& [value, count] : votes) {
    if (2 * count > repeat) result.f0 = value;
  }
  return result;
}

}  // namespace sipf0
