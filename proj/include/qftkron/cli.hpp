// Copyright 2026 The qftkron Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFTKRON_CLI_HPP
#define QFTKRON_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qftkron/circuit.hpp"

namespace qftkron::cli {

enum class OutputFormat { kText, kJson, kCsv };

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kValidationFailure = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResourceLimit = 3;
}  // namespace exit_code

/// Environment variable that overrides the default dense limit.
inline constexpr const char* kDenseLimitEnv = "QFTKRON_DENSE_LIMIT";

struct RunConfig {
  std::size_t n = 1;
  std::size_t d = 2;
  PlanKind kind = PlanKind::kQft;
  Orientation orientation = Orientation::kTargetFirst;
  SwapStyle swap_style = SwapStyle::kKeepSwap;
  std::uint64_t seed = 0;
  double tolerance = 1e-10;
  OutputFormat format = OutputFormat::kText;
  std::size_t dense_limit = kDefaultDenseLimit;

  /// Throws std::invalid_argument unless n >= 1 and d >= 2.
  void validate() const;
};

struct VerifyArgs {
  std::optional<std::string> plan_file;
};

struct CircuitArgs {
  bool counts = false;
  bool diagram = true;
};

struct SimulateArgs {
  std::optional<std::string> input_file;
  /// A single index, or n comma-separated base-d digits.
  std::optional<std::string> basis;
  bool random = false;
  bool check = false;
  bool inverse = false;
};

struct RankGrowthArgs {
  enum class Mode { kQft, kCascade };
  enum class Input { kGeneric, kBasis };

  Mode mode = Mode::kQft;
  /// Cascade size; the state then has k + 1 sites and config.n is ignored.
  std::size_t k = 3;
  /// Orientation for cascade mode; qft mode uses the config's.
  Orientation cascade_orientation = Orientation::kControlFirst;
  Input input = Input::kGeneric;
  std::optional<std::string> basis;
  bool no_prune = false;
  bool timing = false;
};

int cmd_factor(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, const VerifyArgs& args, std::ostream& out,
               std::ostream& err);
int cmd_circuit(const RunConfig& config, const CircuitArgs& args, std::ostream& out,
                std::ostream& err);
int cmd_simulate(const RunConfig& config, const SimulateArgs& args, std::ostream& out,
                 std::ostream& err);
int cmd_rankgrowth(const RunConfig& config, const RankGrowthArgs& args, std::ostream& out,
                   std::ostream& err);

/// One complex per line as "re im"; blank lines and lines starting with '#'
/// are skipped. Throws std::invalid_argument on malformed content.
DenseVector read_vector(std::istream& in);
void write_vector(std::ostream& out, const DenseVector& v);

/// Parses "j" or "j1,j2,...,jn" into a basis index of d^n.
std::size_t parse_basis(const std::string& spec, std::size_t n, std::size_t d);

}  // namespace qftkron::cli

#endif  // QFTKRON_CLI_HPP
