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

#include "qftkron/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "qftkron/cp_state.hpp"
#include "qftkron/serialize.hpp"

namespace qftkron::cli {

using nlohmann::ordered_json;

namespace {

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string role_name(FactorRole r) {
  switch (r) {
    case FactorRole::kFftStage: return "fft_stage";
    case FactorRole::kFourier: return "fourier";
    case FactorRole::kControlledPhase: return "controlled_phase";
  }
  return "?";
}

std::string support_text(const StructuredOperator& op) {
  std::string s = "[";
  bool first = true;
  for (std::size_t site : op.support()) {
    if (!first) s += ',';
    s += 'q' + std::to_string(site + 1);
    first = false;
  }
  return s + "]";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FactorizationPlan build_plan(const RunConfig& c) {
  return c.kind == PlanKind::kFft ? fft_plan(c.n, c.d) : qft_plan(c.n, c.d, c.orientation);
}

std::vector<std::size_t> digits_of(std::size_t index, std::size_t n, std::size_t d) {
  std::vector<std::size_t> digits(n);
  for (std::size_t s = n; s-- > 0;) {
    digits[s] = index % d;
    index /= d;
  }
  return digits;
}

// Runs f and maps library exceptions onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const DenseLimitExceeded& e) {
    err << "error: " << e.what() << " (raise with --dense-limit or " << kDenseLimitEnv << ")\n";
    return exit_code::kResourceLimit;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kResourceLimit;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
}

}  // namespace

void RunConfig::validate() const {
  if (n < 1) throw std::invalid_argument("--n must be at least 1");
  if (d < 2) throw std::invalid_argument("--d must be at least 2");
  if (!(tolerance > 0.0)) throw std::invalid_argument("--tolerance must be positive");
  if (swap_style == SwapStyle::kThreeCnot && d != 2)
    throw std::invalid_argument("three-CNOT swaps need d = 2");
}

DenseVector read_vector(std::istream& in) {
  std::vector<cplx> values;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double re = 0.0, im = 0.0;
    std::string extra;
    if (!(fields >> re >> im) || (fields >> extra))
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 're im'");
    values.emplace_back(re, im);
  }
  if (values.empty()) throw std::invalid_argument("input vector is empty");
  return DenseVector(std::move(values));
}

void write_vector(std::ostream& out, const DenseVector& v) {
  char buf[96];
  for (std::size_t j = 0; j < v.dim(); ++j) {
    // + 0.0 turns -0 into 0
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", v[j].real() + 0.0, v[j].imag() + 0.0);
    out << buf;
  }
}

std::size_t parse_basis(const std::string& spec, std::size_t n, std::size_t d) {
  std::vector<std::size_t> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad basis spec '" + spec + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad basis spec '" + spec + "'");
    parts.push_back(static_cast<std::size_t>(v));
  }
  const std::size_t dim = checked_pow(d, n);
  if (parts.size() == 1) {
    if (parts[0] >= dim) throw std::invalid_argument("basis index out of range");
    return parts[0];
  }
  if (parts.size() != n)
    throw std::invalid_argument("basis spec needs one index or " + std::to_string(n) + " digits");
  std::size_t index = 0;
  for (std::size_t digit : parts) {
    if (digit >= d) throw std::invalid_argument("basis digit out of range");
    index = index * d + digit;
  }
  return index;
}

int cmd_factor(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const FactorizationPlan plan = build_plan(config);
    if (config.format == OutputFormat::kJson) {
      out << serialize(plan) << '\n';
      return exit_code::kOk;
    }
    if (config.format == OutputFormat::kCsv) {
      out << "index,label,role,support,terms\n";
      for (std::size_t i = 0; i < plan.factors.size(); ++i) {
        const auto& f = plan.factors[i];
        std::string support = support_text(f.op);
        for (char& ch : support)
          if (ch == ',') ch = ' ';
        out << i << ',' << f.label() << ',' << role_name(f.role) << ',' << support << ','
            << f.op.terms().size() << '\n';
      }
      return exit_code::kOk;
    }
    std::size_t fourier = 0, diagonal = 0, stages = 0;
    for (const auto& f : plan.factors) {
      if (f.role == FactorRole::kFourier) ++fourier;
      if (f.role == FactorRole::kControlledPhase) ++diagonal;
      if (f.role == FactorRole::kFftStage) ++stages;
    }
    out << "plan " << to_string(plan.kind) << " n=" << plan.n << " d=" << plan.d;
    if (plan.kind == PlanKind::kQft) out << " orientation=" << to_string(plan.orientation);
    out << '\n';
    if (plan.kind == PlanKind::kQft)
      out << "factors " << plan.factors.size() << " (fourier " << fourier << ", diagonal "
          << diagonal << ")\n";
    else
      out << "factors " << stages << " (fft stages)\n";
    char buf[160];
    for (std::size_t i = 0; i < plan.factors.size(); ++i) {
      const auto& f = plan.factors[i];
      std::snprintf(buf, sizeof buf, "  %3zu  %-14s %-17s %-12s terms %zu\n", i,
                    f.label().c_str(), role_name(f.role).c_str(), support_text(f.op).c_str(),
                    f.op.terms().size());
      out << buf;
    }
    out << "reversal digit_reversal swaps=" << plan.reversal.swap_count() << '\n';
    return exit_code::kOk;
  });
}

int cmd_verify(const RunConfig& config, const VerifyArgs& args, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const FactorizationPlan plan =
        args.plan_file ? deserialize_plan(read_file(*args.plan_file)) : build_plan(config);
    dense_dim(plan.d, plan.n, config.dense_limit);
    const PlanResidual r = verify_plan(plan, {config.dense_limit, true});
    const bool pass = r.residual < config.tolerance;
    const std::size_t dim = checked_pow(plan.d, plan.n);
    if (config.format == OutputFormat::kJson) {
      ordered_json doc;
      doc["kind"] = to_string(plan.kind);
      doc["n"] = plan.n;
      doc["d"] = plan.d;
      doc["dim"] = dim;
      doc["factors"] = plan.factors.size();
      doc["residual"] = r.residual;
      doc["max_factor_unitarity"] = r.max_unitarity();
      doc["tolerance"] = config.tolerance;
      doc["pass"] = pass;
      out << doc.dump(2) << '\n';
    } else if (config.format == OutputFormat::kCsv) {
      out << "kind,n,d,dim,residual,max_factor_unitarity,tolerance,pass\n"
          << to_string(plan.kind) << ',' << plan.n << ',' << plan.d << ',' << dim << ','
          << sci(r.residual) << ',' << sci(r.max_unitarity()) << ',' << sci(config.tolerance)
          << ',' << (pass ? "true" : "false") << '\n';
    } else {
      out << "verify " << to_string(plan.kind) << " n=" << plan.n << " d=" << plan.d
          << " dim=" << dim << " factors=" << plan.factors.size() << '\n'
          << "residual " << sci(r.residual) << '\n'
          << "max_factor_unitarity " << sci(r.max_unitarity()) << '\n'
          << "tolerance " << sci(config.tolerance) << '\n'
          << (pass ? "PASS" : "FAIL") << '\n';
    }
    if (!pass) err << "residual " << sci(r.residual) << " is not below tolerance\n";
    return pass ? exit_code::kOk : exit_code::kValidationFailure;
  });
}

int cmd_circuit(const RunConfig& config, const CircuitArgs& args, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    if (config.kind != PlanKind::kQft)
      throw std::invalid_argument("circuit lowering needs --kind qft");
    const Circuit circuit = lower_to_circuit(build_plan(config), config.swap_style);
    const GateCounts counts = count_gates(circuit);
    const bool qubits = config.d == 2;
    const std::size_t construction = construction_cnot_count(config.n);
    const std::size_t quoted = quoted_cnot_count(config.n);
    const bool differs = construction != quoted;

    if (config.format == OutputFormat::kJson) {
      ordered_json doc;
      doc["circuit"] = ordered_json::parse(serialize(circuit));
      if (args.counts) {
        ordered_json jc;
        jc["hadamard_or_fourier"] = counts.hadamard_or_fourier;
        jc["controlled_r"] = counts.controlled_r;
        jc["swap"] = counts.swap;
        jc["cnot"] = counts.cnot;
        jc["total"] = counts.total();
        if (qubits) {
          jc["reversal_cnot_construction"] = construction;
          jc["reversal_cnot_quoted"] = quoted;
          jc["reversal_cnot_differs"] = differs;
        }
        doc["counts"] = std::move(jc);
      }
      out << doc.dump(2) << '\n';
      return exit_code::kOk;
    }
    if (args.diagram) {
      if (circuit.n <= 16)
        out << render_text(circuit);
      else
        err << "diagram skipped for n > 16\n";
    }
    if (args.counts) {
      if (config.format == OutputFormat::kCsv) {
        out << "gate,count\n"
            << (qubits ? "hadamard" : "fourier") << ',' << counts.hadamard_or_fourier << '\n'
            << "controlled_r," << counts.controlled_r << '\n'
            << "swap," << counts.swap << '\n'
            << "cnot," << counts.cnot << '\n';
        if (qubits)
          out << "reversal_cnot_construction," << construction << '\n'
              << "reversal_cnot_quoted," << quoted << '\n';
        return exit_code::kOk;
      }
      if (args.diagram && circuit.n <= 16) out << '\n';
      out << "gate counts n=" << config.n << " d=" << config.d << '\n'
          << "  " << (qubits ? "hadamard     " : "fourier      ") << counts.hadamard_or_fourier
          << '\n'
          << "  controlled-R " << counts.controlled_r << '\n'
          << "  swap         " << counts.swap << '\n'
          << "  cnot         " << counts.cnot << '\n';
      if (qubits) {
        out << "reversal as CNOTs\n"
            << "  construction 3*floor(n/2) = " << construction << '\n'
            << "  quoted       floor(3n/2)  = " << quoted << '\n';
        if (differs)
          out << "note: the quoted figure and the three-CNOT swap construction differ for odd n;"
                 " the emitted circuit follows the construction\n";
      }
    }
    return exit_code::kOk;
  });
}

int cmd_simulate(const RunConfig& config, const SimulateArgs& args, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const std::size_t dim = dense_dim(config.d, config.n, config.dense_limit);
    const int sources = (args.input_file ? 1 : 0) + (args.basis ? 1 : 0) + (args.random ? 1 : 0);
    if (sources != 1)
      throw std::invalid_argument("give exactly one of --input, --basis, --random");

    DenseVector x(dim);
    if (args.input_file) {
      std::ifstream in(*args.input_file);
      if (!in) throw std::invalid_argument("cannot open " + *args.input_file);
      x = read_vector(in);
      if (x.dim() != dim)
        throw std::invalid_argument("input has " + std::to_string(x.dim()) +
                                    " entries, expected " + std::to_string(dim));
    } else if (args.basis) {
      x[parse_basis(*args.basis, config.n, config.d)] = 1.0;
    } else {
      std::mt19937_64 rng(config.seed);
      std::normal_distribution<double> g;
      for (std::size_t j = 0; j < dim; ++j) x[j] = {g(rng), g(rng)};
    }

    const Direction dir = args.inverse ? Direction::kInverse : Direction::kForward;
    const FactorizationPlan plan = build_plan(config);
    DenseVector y;
    if (config.kind == PlanKind::kQft) {
      Circuit c = lower_to_circuit(plan, config.swap_style);
      if (args.inverse) c = inverse(c);
      y = simulate_dense(c, x, config.dense_limit);
    } else {
      y = fft_apply(plan, x, dir);
    }

    double diff = 0.0;
    if (args.check) diff = max_abs_diff(y, dft_matrix(dim, dir, config.dense_limit) * x);
    const bool pass = !args.check || diff < config.tolerance;

    if (config.format == OutputFormat::kJson) {
      ordered_json doc;
      doc["n"] = config.n;
      doc["d"] = config.d;
      doc["direction"] = args.inverse ? "inverse" : "forward";
      ordered_json amps = ordered_json::array();
      for (std::size_t j = 0; j < y.dim(); ++j)
        amps.push_back({y[j].real() + 0.0, y[j].imag() + 0.0});
      doc["amplitudes"] = std::move(amps);
      if (args.check) {
        doc["check_max_diff"] = diff;
        doc["pass"] = pass;
      }
      out << doc.dump(2) << '\n';
    } else if (config.format == OutputFormat::kCsv) {
      char buf[112];
      out << "index,re,im\n";
      for (std::size_t j = 0; j < y.dim(); ++j) {
        std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", j, y[j].real() + 0.0,
                      y[j].imag() + 0.0);
        out << buf;
      }
    } else {
      write_vector(out, y);
    }
    if (args.check) err << "check max_diff " << sci(diff) << (pass ? " PASS" : " FAIL") << '\n';
    return pass ? exit_code::kOk : exit_code::kValidationFailure;
  });
}

int cmd_rankgrowth(const RunConfig& config, const RankGrowthArgs& args, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    config.validate();
    const bool cascade = args.mode == RankGrowthArgs::Mode::kCascade;
    if (cascade && args.k < 1) throw std::invalid_argument("--k must be at least 1");
    const std::size_t sites = cascade ? args.k + 1 : config.n;
    dense_dim(config.d, sites, config.dense_limit);

    const CPState input = [&] {
      if (args.input == RankGrowthArgs::Input::kGeneric)
        return generic_rank_one(sites, config.d, config.seed);
      const std::size_t index = args.basis ? parse_basis(*args.basis, sites, config.d) : 0;
      return cp_basis_state(digits_of(index, sites, config.d), config.d);
    }();
    const double prune = args.no_prune ? 0.0 : kDefaultPrune;
    RankExperimentReport report =
        cascade ? cascade_rank_experiment(args.k, config.d, input, prune, args.cascade_orientation,
                                          config.dense_limit)
                : qft_rank_experiment(config.n, config.d, input, prune, config.orientation,
                                      config.dense_limit);
    if (!args.timing)
      for (auto& s : report.steps) s.elapsed_ms = 0.0;
    const bool pass = report.residual < config.tolerance;

    if (config.format == OutputFormat::kJson) {
      out << trajectory_json(report) << '\n';
    } else if (config.format == OutputFormat::kCsv) {
      out << trajectory_csv(report);
      err << "zero-weight terms per step:";
      for (const auto& s : report.steps) err << ' ' << s.zero_weight_terms;
      err << '\n';
    } else {
      out << (cascade ? "cascade k=" + std::to_string(args.k) : "qft n=" + std::to_string(config.n))
          << " d=" << config.d << " input="
          << (args.input == RankGrowthArgs::Input::kGeneric ? "generic" : "basis")
          << " prune=" << (args.no_prune ? "off" : "on") << '\n';
      char buf[160];
      std::snprintf(buf, sizeof buf, "%5s  %-16s %6s %6s %10s\n", "step", "factor", "terms",
                    "zero", "ms");
      out << buf;
      for (const auto& s : report.steps) {
        std::snprintf(buf, sizeof buf, "%5zu  %-16s %6zu %6zu %10.3f\n", s.step, s.label.c_str(),
                      s.term_count, s.zero_weight_terms, s.elapsed_ms);
        out << buf;
      }
      out << "final_terms " << report.final_term_count << '\n'
          << "residual " << sci(report.residual) << '\n';
    }
    if (!pass) err << "dense check residual " << sci(report.residual) << " too large\n";
    return pass ? exit_code::kOk : exit_code::kValidationFailure;
  });
}

}  // namespace qftkron::cli
