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

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "qftkron/cli.hpp"

namespace qc = qftkron::cli;

namespace {

CLI::Option* add_common(CLI::App* cmd, qc::RunConfig& config, std::string& output) {
  cmd->add_option("--n", config.n, "number of sites")->check(CLI::PositiveNumber);
  cmd->add_option("--d", config.d, "levels per site")->check(CLI::Range(2, 1 << 20));
  cmd->add_option("--kind", config.kind, "plan kind: qft or fft")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, qftkron::PlanKind>{{"qft", qftkron::PlanKind::kQft},
                                                   {"fft", qftkron::PlanKind::kFft}},
          CLI::ignore_case));
  auto* orientation = cmd->add_option("--orientation", config.orientation, "control-first or target-first")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, qftkron::Orientation>{
              {"control-first", qftkron::Orientation::kControlFirst},
              {"control_first", qftkron::Orientation::kControlFirst},
              {"target-first", qftkron::Orientation::kTargetFirst},
              {"target_first", qftkron::Orientation::kTargetFirst}},
          CLI::ignore_case));
  cmd->add_option("--swap-style", config.swap_style, "swap or three-cnot")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, qftkron::SwapStyle>{
              {"swap", qftkron::SwapStyle::kKeepSwap},
              {"three-cnot", qftkron::SwapStyle::kThreeCnot}},
          CLI::ignore_case));
  cmd->add_option("--seed", config.seed, "random seed");
  cmd->add_option("--tolerance", config.tolerance, "pass threshold for residuals");
  cmd->add_option("--format", config.format, "text, json or csv")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, qc::OutputFormat>{{"text", qc::OutputFormat::kText},
                                                  {"json", qc::OutputFormat::kJson},
                                                  {"csv", qc::OutputFormat::kCsv}},
          CLI::ignore_case));
  cmd->add_option("--dense-limit", config.dense_limit, "largest dense dimension")
      ->check(CLI::PositiveNumber);
  cmd->add_option("-o,--output", output, "write data here instead of stdout");
  return orientation;
}

}  // namespace

int main(int argc, char** argv) {
  qc::RunConfig config;
  if (const char* env = std::getenv(qc::kDenseLimitEnv)) {
    try {
      config.dense_limit = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: " << qc::kDenseLimitEnv << " is not a number\n";
      return qc::exit_code::kUsage;
    }
  }

  CLI::App app{"Fourier transform factorizations, circuits and rank experiments"};
  app.require_subcommand(1);
  std::string output;

  auto* factor = app.add_subcommand("factor", "print a factorization plan");
  add_common(factor, config, output);

  qc::VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "check a plan against the dense DFT");
  add_common(verify, config, output);
  verify->add_option("--plan", verify_args.plan_file, "plan JSON file to verify");

  qc::CircuitArgs circuit_args;
  bool no_diagram = false;
  auto* circuit = app.add_subcommand("circuit", "lower the QFT plan to gates");
  add_common(circuit, config, output);
  circuit->add_flag("--counts", circuit_args.counts, "append gate counts");
  circuit->add_flag("--no-diagram", no_diagram, "omit the text diagram");

  qc::SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "transform a vector");
  add_common(simulate, config, output);
  simulate->add_option("--input", sim_args.input_file, "vector file, one 're im' per line");
  simulate->add_option("--basis", sim_args.basis, "basis index or comma-separated digits");
  simulate->add_flag("--random", sim_args.random, "seeded random input");
  simulate->add_flag("--check", sim_args.check, "compare with the dense DFT");
  simulate->add_flag("--inverse", sim_args.inverse, "apply the inverse transform");

  qc::RankGrowthArgs rank_args;
  std::string input_kind = "generic";
  auto* rank = app.add_subcommand("rankgrowth", "term counts through a plan on a CP state");
  auto* rank_orientation = add_common(rank, config, output);
  rank->add_option("--mode", rank_args.mode, "qft or cascade")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, qc::RankGrowthArgs::Mode>{
              {"qft", qc::RankGrowthArgs::Mode::kQft},
              {"cascade", qc::RankGrowthArgs::Mode::kCascade}},
          CLI::ignore_case));
  rank->add_option("--k", rank_args.k, "cascade size")->check(CLI::PositiveNumber);
  rank->add_option("--input", input_kind, "generic or basis")
      ->check(CLI::IsMember({"generic", "basis"}));
  rank->add_option("--basis", rank_args.basis, "basis index or digits for --input basis");
  rank->add_flag("--no-prune", rank_args.no_prune, "keep zero-weight terms");
  rank->add_flag("--timing", rank_args.timing, "record wall-clock time per step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qc::exit_code::kUsage;
  }
  circuit_args.diagram = !no_diagram;
  if (rank_orientation->count() > 0) rank_args.cascade_orientation = config.orientation;
  rank_args.input =
      input_kind == "basis" ? qc::RankGrowthArgs::Input::kBasis : qc::RankGrowthArgs::Input::kGeneric;

  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "error: cannot write " << output << '\n';
      return qc::exit_code::kUsage;
    }
  }
  std::ostream& out = output.empty() ? std::cout : file;

  if (factor->parsed()) return qc::cmd_factor(config, out, std::cerr);
  if (verify->parsed()) return qc::cmd_verify(config, verify_args, out, std::cerr);
  if (circuit->parsed()) return qc::cmd_circuit(config, circuit_args, out, std::cerr);
  if (simulate->parsed()) return qc::cmd_simulate(config, sim_args, out, std::cerr);
  return qc::cmd_rankgrowth(config, rank_args, out, std::cerr);
}
