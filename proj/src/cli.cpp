// Copyright 2026 The Authors.
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

#include "blm/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "blm/fptas.hpp"
#include "blm/generators.hpp"
#include "blm/instance_io.hpp"
#include "blm/oracle.hpp"

namespace blm {
namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw BlmError(Errc::bad_params, "cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw BlmError(Errc::bad_params, "cannot write file '" + path + "'");
  out << text;
}

std::string format_fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  const auto end = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(end - start).count();
}

// Certified lower bound on profit / OPT. 1 when the run is exactly optimal.
double opt_ratio_lb(const SolveOutcome& outcome) {
  if (outcome.opt_upper_bound <= 0.0) return 1.0;  // exact solve
  if (outcome.solution.profit > 0)
    return std::min(1.0, static_cast<double>(outcome.solution.profit) /
                             outcome.opt_upper_bound);
  // Zero-profit witness: it is optimal exactly when the certified upper
  // bound alpha * (t + n) already rules out a profit of 1. Profits are
  // integers, so compare exactly in rationals rather than in floating point.
  if (outcome.alpha && outcome.rounded_profit) {
    const __int128 upper_num =
        static_cast<__int128>(outcome.alpha->num) *
        (*outcome.rounded_profit + outcome.preprocessed_size);
    if (upper_num < outcome.alpha->den) return 1.0;
  }
  return 0.0;
}

void print_outcome(const SolveOutcome& outcome, std::int64_t budget,
                   const std::string& mode, double wall_ms, bool structured,
                   std::ostream& out) {
  const bool has_tables = mode != "oracle";
  if (structured) {
    json j;
    j["mode"] = mode;
    j["ids"] = outcome.solution.ids;
    j["profit"] = outcome.solution.profit;
    j["cost"] = outcome.solution.cost;
    j["budget"] = budget;
    if (outcome.epsilon) j["epsilon"] = outcome.epsilon->to_string();
    if (outcome.alpha) j["alpha"] = outcome.alpha->to_string();
    if (outcome.rounded_profit) j["rounded_profit"] = *outcome.rounded_profit;
    if (outcome.rounded_max) j["rounded_max"] = *outcome.rounded_max;
    if (outcome.opt_upper_bound > 0.0) {
      j["opt_upper_bound"] = outcome.opt_upper_bound;
      j["opt_ratio_lb"] = opt_ratio_lb(outcome);
    }
    if (has_tables) {
      j["preprocessed_size"] = outcome.preprocessed_size;
      j["table_rows"] = outcome.table_rows;
      j["table_cols"] = outcome.table_cols;
      j["total_cells"] = outcome.total_cells;
      j["recursive_calls"] = outcome.recursive_calls;
      j["node_count"] = outcome.node_count;
    }
    j["warnings"] = outcome.warnings;
    j["wall_ms"] = wall_ms;
    out << j.dump(2) << "\n";
    return;
  }

  out << "mode: " << mode << "\n";
  out << "profit: " << outcome.solution.profit << "\n";
  out << "cost: " << outcome.solution.cost << "\n";
  out << "budget: " << budget << "\n";
  out << "ids:";
  for (const std::string& id : outcome.solution.ids) out << " " << id;
  out << "\n";
  if (outcome.epsilon) out << "epsilon: " << outcome.epsilon->to_string() << "\n";
  if (outcome.alpha) out << "alpha: " << outcome.alpha->to_string() << "\n";
  if (outcome.rounded_profit)
    out << "rounded_profit: " << *outcome.rounded_profit << "\n";
  if (outcome.rounded_max)
    out << "rounded_max: " << *outcome.rounded_max << "\n";
  if (outcome.opt_upper_bound > 0.0) {
    out << "opt_upper_bound: " << format_fixed(outcome.opt_upper_bound, 6)
        << "\n";
    out << "opt_ratio_lb: " << format_fixed(opt_ratio_lb(outcome), 6) << "\n";
  }
  if (has_tables) {
    out << "preprocessed_size: " << outcome.preprocessed_size << "\n";
    out << "table: " << outcome.table_rows << " x " << outcome.table_cols
        << "\n";
    out << "total_cells: " << outcome.total_cells << "\n";
    out << "recursive_calls: " << outcome.recursive_calls << "\n";
    out << "node_count: " << outcome.node_count << "\n";
  }
  for (const std::string& w : outcome.warnings)
    out << "warning: " << w << "\n";
  out << "wall_ms: " << format_fixed(wall_ms, 3) << "\n";
}

struct BenchPoint {
  std::int32_t n;
  std::string epsilon;
  std::uint64_t seed;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"budgeted laminar matroid solver"};
  app.require_subcommand(1);

  // Shared flags, bound per subcommand.
  std::string instance_path;
  std::string epsilon_text;
  std::string format = "text";
  std::string out_path;
  int oracle_limit = 20;

  const auto add_common = [&](CLI::App* cmd, bool needs_epsilon) {
    cmd->add_option("--instance", instance_path, "instance file to load")
        ->required()
        ->check(CLI::ExistingFile);
    if (needs_epsilon) {
      cmd->add_option("--epsilon", epsilon_text,
                      "approximation parameter, a positive decimal")
          ->required();
    }
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  CLI::App* solve_cmd =
      app.add_subcommand("solve", "approximate solve with profit rounding");
  add_common(solve_cmd, true);

  CLI::App* exact_cmd =
      app.add_subcommand("exact", "exact solve on original profits");
  add_common(exact_cmd, false);

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "brute-force optimum by subset enumeration");
  add_common(oracle_cmd, false);
  oracle_cmd->add_option("--limit", oracle_limit,
                         "largest instance the oracle will enumerate");

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check instance invariants");
  add_common(validate_cmd, false);

  // gen
  GenParams gen_params;
  std::string gen_kind = "random_laminar";
  std::int64_t gen_budget = -1;
  std::int64_t gen_capacity = -1;
  std::int64_t gen_capacity_cap = -1;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--kind", gen_kind, "instance shape")
      ->check(CLI::IsMember({"knapsack", "cardinality", "multiple_choice",
                             "partition", "random_laminar"}));
  gen_cmd->add_option("--n", gen_params.n, "number of elements");
  gen_cmd->add_option("--seed", gen_params.seed, "random seed");
  gen_cmd->add_option("--cost-min", gen_params.cost_min, "minimum cost");
  gen_cmd->add_option("--cost-max", gen_params.cost_max, "maximum cost");
  gen_cmd->add_option("--profit-min", gen_params.profit_min, "minimum profit");
  gen_cmd->add_option("--profit-max", gen_params.profit_max, "maximum profit");
  gen_cmd->add_option("--budget", gen_budget,
                      "budget (default: half the total cost)");
  gen_cmd->add_option("--capacity", gen_capacity,
                      "ground capacity for kind=cardinality");
  gen_cmd->add_option("--groups", gen_params.groups,
                      "group sizes for grouped kinds (comma separated)")
      ->delimiter(',');
  gen_cmd->add_option("--group-caps", gen_params.group_caps,
                      "group capacities for kind=partition")
      ->delimiter(',');
  gen_cmd->add_option("--depth", gen_params.max_depth,
                      "nesting depth for kind=random_laminar");
  gen_cmd->add_option("--children", gen_params.max_children,
                      "split arity for kind=random_laminar");
  gen_cmd->add_option("--kcap", gen_capacity_cap,
                      "capacity cap for kind=random_laminar");
  gen_cmd->add_option("--out", out_path, "write to file instead of stdout");

  // bench
  std::vector<std::int32_t> bench_n = {50, 100, 200};
  std::vector<std::string> bench_eps = {"0.25"};
  std::string bench_mode = "fptas";
  std::uint64_t bench_seed = 1;
  std::int64_t bench_kcap = 3;
  std::int32_t bench_depth = 6;
  std::int64_t bench_amount_max = 1000;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "time a grid of generated instances (CSV)");
  bench_cmd->add_option("--n-list", bench_n, "instance sizes")->delimiter(',');
  bench_cmd->add_option("--epsilons", bench_eps, "epsilon values")
      ->delimiter(',');
  bench_cmd->add_option("--mode", bench_mode, "solver to time")
      ->check(CLI::IsMember({"fptas", "exact"}));
  bench_cmd->add_option("--seed", bench_seed, "base seed");
  bench_cmd->add_option("--kcap", bench_kcap, "capacity cap per family set");
  bench_cmd->add_option("--depth", bench_depth, "nesting depth");
  bench_cmd->add_option("--amount-max", bench_amount_max,
                        "cost/profit range upper bound");
  bench_cmd->add_option("--out", out_path, "write to file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const bool structured = format == "structured";

  try {
    if (*solve_cmd || *exact_cmd || *oracle_cmd) {
      const LaminarInstance inst = load_instance(slurp(instance_path));
      const auto start = std::chrono::steady_clock::now();
      if (*oracle_cmd) {
        const OracleResult res = enumerate_opt(inst, oracle_limit);
        SolveOutcome outcome;  // reuse the printer for the shared fields
        outcome.solution = {res.ids, res.cost, res.profit};
        outcome.preprocessed_size = inst.size();
        print_outcome(outcome, inst.budget(), "oracle", elapsed_ms(start),
                      structured, out);
      } else if (*solve_cmd) {
        const Rational eps = Rational::parse_decimal(epsilon_text);
        const SolveOutcome outcome = solve(inst, eps);
        print_outcome(outcome, inst.budget(), "fptas", elapsed_ms(start),
                      structured, out);
      } else {
        const SolveOutcome outcome = solve_exact(inst);
        print_outcome(outcome, inst.budget(), "exact", elapsed_ms(start),
                      structured, out);
      }
      return 0;
    }

    if (*validate_cmd) {
      // Parse and canonicalize, then report every invariant violation.
      InstanceFile file = parse_file(slurp(instance_path));
      const ValidationReport report =
          validate_laminar(canonicalize(std::move(file.data)));
      if (structured) {
        json j;
        j["valid"] = report.ok();
        json issues = json::array();
        for (const ValidationIssue& issue : report.issues) {
          json item;
          item["kind"] = issue_kind_name(issue.kind);
          item["detail"] = issue.detail;
          issues.push_back(std::move(item));
        }
        j["issues"] = std::move(issues);
        out << j.dump(2) << "\n";
      } else {
        out << report.to_string() << "\n";
      }
      return report.ok() ? 0 : 1;
    }

    if (*gen_cmd) {
      gen_params.kind = [&] {
        if (gen_kind == "knapsack") return GenKind::knapsack;
        if (gen_kind == "cardinality") return GenKind::cardinality;
        if (gen_kind == "multiple_choice") return GenKind::multiple_choice;
        if (gen_kind == "partition") return GenKind::partition;
        return GenKind::random_laminar;
      }();
      if (gen_budget >= 0) gen_params.budget = gen_budget;
      if (gen_capacity >= 0) gen_params.capacity = gen_capacity;
      if (gen_capacity_cap >= 0) gen_params.capacity_cap = gen_capacity_cap;
      write_text(out_path, serialize(gen_special(gen_params)), out);
      return 0;
    }

    if (*bench_cmd) {
      std::vector<BenchPoint> grid;
      std::uint64_t next_seed = bench_seed;
      for (std::int32_t n : bench_n) {
        for (const std::string& eps : bench_eps)
          grid.push_back({n, eps, next_seed++});
      }
      std::ostringstream csv;
      csv << "seed,n,family_size,epsilon,mode,profit,opt_ratio_lb,"
             "table_cells,recursive_calls,wall_ms\n";
      for (const BenchPoint& point : grid) {
        GenParams params;
        params.kind = GenKind::random_laminar;
        params.n = point.n;
        params.seed = point.seed;
        params.cost_min = 0;
        params.cost_max = bench_amount_max;
        params.profit_min = 0;
        params.profit_max = bench_amount_max;
        params.max_depth = bench_depth;
        params.capacity_cap = bench_kcap;
        const InstanceFile file = gen_special(params);
        const LaminarInstance inst = LaminarInstance::build(file.data);

        const auto start = std::chrono::steady_clock::now();
        const SolveOutcome outcome =
            bench_mode == "exact"
                ? solve_exact(inst)
                : solve(inst, Rational::parse_decimal(point.epsilon));
        const double wall = elapsed_ms(start);

        csv << point.seed << "," << point.n << "," << inst.family().size()
            << "," << point.epsilon << "," << bench_mode << ","
            << outcome.solution.profit << ","
            << format_fixed(opt_ratio_lb(outcome), 6) << ","
            << outcome.total_cells << "," << outcome.recursive_calls << ","
            << format_fixed(wall, 3) << "\n";
      }
      write_text(out_path, csv.str(), out);
      return 0;
    }
  } catch (const BlmError& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::validation:
      case Errc::syntax:
      case Errc::schema:
      case Errc::unknown_element:
      case Errc::too_large:
        return 1;
      case Errc::bad_params:
      case Errc::zero_epsilon:
        return 2;
      default:
        return 3;
    }
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }

  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace blm
