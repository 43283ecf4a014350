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

#ifndef SIPF0_CLI_H_
#define SIPF0_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sipf0/adversary.h"
#include "sipf0/encoding.h"

namespace sipf0::cli {

inline constexpr int kExitAccept = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitReject = 2;

struct RunConfig {
  uint64_t universe = 0;
  uint64_t seed = 0;
  std::optional<AdversaryKind> adversary;  // nullopt: honest
  uint64_t trials = 100;
  uint64_t length = 0;  // experiment streams; 0 means 4m
  std::string stream_path = "-";
  std::string transcript_path;
  std::string stats_path;
  int repeat = 1;
};

class StreamParseError : public std::runtime_error {
 public:
  StreamParseError(size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  size_t line() const { return line_; }

 private:
  size_t line_;
};

// ASCII decimal, one symbol per line, each in [1, m]; blank lines skipped.
std::vector<Symbol> read_stream(std::istream& in, uint64_t m);
void write_stream(std::ostream& out, const std::vector<Symbol>& stream);

// n symbols uniform over [1, m], a pure function of (m, n, seed).
std::vector<Symbol> random_stream(uint64_t m, uint64_t n, uint64_t seed);

int cmd_run(const RunConfig& config, std::istream& in, std::ostream& out,
            std::ostream& err);
int cmd_experiment(const RunConfig& config, std::ostream& out,
                   std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command line: `sip_f0 <run|experiment|bench> [flags]`.
int cli_main(int argc, const char* const* argv, std::istream& in,
             std::ostream& out, std::ostream& err);

}  // namespace sipf0::cli

#endif  // SIPF0_CLI_H_
