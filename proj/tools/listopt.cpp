#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "listopt/errors.hpp"
#include "listopt/experiment.hpp"
#include "listopt/online.hpp"

namespace {

using namespace listopt;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::vector<std::string> ordering_labels(const ItemCatalog& items, const Permutation& rho) {
  std::vector<std::string> labels;
  for (int p = 1; p <= rho.size(); ++p) labels.push_back(items.label(rho.item_at(p)));
  return labels;
}

nlohmann::ordered_json trace_json(const ItemCatalog& items, const std::vector<OracleStep>& trace) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& step : trace) {
    out.push_back({{"accessed_in", ordering_labels(items, step.accessed_in)},
                   {"after", ordering_labels(items, step.after)}});
  }
  return out;
}

// ---- guards ----------------------------------------------------------

struct GuardFlags {
  int max_l = 0;  // 0 = not given
  bool force = false;
};

void add_guard_flags(CLI::App* cmd, GuardFlags& g) {
  cmd->add_option("--max-l", g.max_l,
                  "List-size guard; overrides the LISTOPT_MAX_L environment variable");
  cmd->add_flag("--force", g.force,
                "Lift guards to the instance size (prints a memory estimate to stderr)");
}

std::optional<int> env_max_l() {
  const char* raw = std::getenv("LISTOPT_MAX_L");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) {
    throw UsageError("LISTOPT_MAX_L must be a positive integer, got '" + std::string(raw) + "'");
  }
  return static_cast<int>(value);
}

int resolved_max_l(const GuardFlags& g, int fallback) {
  if (g.max_l > 0) return g.max_l;
  if (const auto env = env_max_l()) return *env;
  return fallback;
}

void force_warning(int l, double bytes) {
  std::fprintf(stderr, "warning: list-size guard lifted to l=%d; estimated working set ~%.1f MiB\n",
               l, bytes / (1024.0 * 1024.0));
}

double fact_d(int l) {
  double f = 1.0;
  for (int i = 2; i <= l; ++i) f *= i;
  return f;
}

SolverLimits solver_limits_for(const GuardFlags& g, int l, std::int64_t m) {
  SolverLimits limits;
  limits.max_list_size = resolved_max_l(g, limits.max_list_size);
  if (g.force && l > limits.max_list_size) {
    limits.max_list_size = l;
    const double f = fact_d(l);
    // per-item tables + two distance layers + two choice layers per request
    force_warning(l, f * l * (1.0 + 4.0 * l) + 16.0 * f + 8.0 * f * static_cast<double>(m));
  }
  return limits;
}

OracleLimits oracle_limits_for(const GuardFlags& g, int l, std::int64_t m) {
  OracleLimits limits;
  limits.max_list_size = resolved_max_l(g, limits.max_list_size);
  if (g.force) {
    if (l > limits.max_list_size) {
      limits.max_list_size = l;
      const double f = fact_d(l);
      // pairwise distance matrix + per-item tables + dp/parent layers
      force_warning(l, f * f + f * l * (1.0 + 4.0 * l) + 48.0 * f);
    }
    if (m > limits.max_requests) limits.max_requests = m;
  }
  return limits;
}

// ---- instance flags --------------------------------------------------

struct InstanceFlags {
  std::string list_csv;
  std::string requests_csv;
  std::string trace_path;
};

void add_instance_flags(CLI::App* cmd, InstanceFlags& flags) {
  cmd->add_option("--list", flags.list_csv,
                  "Comma-separated item labels; the given order is the starting list");
  auto* requests =
      cmd->add_option("--requests", flags.requests_csv, "Comma-separated request labels");
  auto* trace = cmd->add_option("--trace", flags.trace_path,
                                "Trace file of whitespace-separated request tokens ('-' = stdin)");
  requests->excludes(trace);
}

struct Instance {
  ItemCatalog items;
  Permutation rho0;
  RequestSequence sigma;
};

Instance build_instance(const InstanceFlags& flags) {
  if (flags.list_csv.empty() && flags.trace_path.empty()) {
    throw UsageError("provide --list or --trace");
  }
  if (flags.list_csv.empty()) {
    auto ingested = ingest_trace(read_file(flags.trace_path));
    const int l = ingested.items.size();
    return Instance{std::move(ingested.items), Permutation::identity(l),
                    std::move(ingested.sequence)};
  }

  ItemCatalog items(split_csv(flags.list_csv));
  std::vector<std::string> tokens = flags.trace_path.empty()
                                        ? split_csv(flags.requests_csv)
                                        : trace_tokens(read_file(flags.trace_path));
  std::vector<int> requests;
  requests.reserve(tokens.size());
  for (const auto& token : tokens) {
    const auto idx = items.index_of(token);
    if (!idx) throw DomainError("unknown item '" + token + "'");
    requests.push_back(*idx);
  }
  const int l = items.size();
  return Instance{std::move(items), Permutation::identity(l),
                  RequestSequence(std::move(requests), l)};
}

// ---- subcommands -----------------------------------------------------

void run_opt(const InstanceFlags& flags, const GuardFlags& guards) {
  const Instance inst = build_instance(flags);
  const auto limits = solver_limits_for(guards, inst.rho0.size(), inst.sigma.length());
  const Schedule schedule = solve_optimal(inst.rho0, inst.sigma, limits);
  std::cout << schedule_to_json(inst.items, inst.rho0, inst.sigma, schedule).dump(2) << "\n";
}

void run_oracle(const InstanceFlags& flags, const GuardFlags& guards, const std::string& which,
                bool witness) {
  const Instance inst = build_instance(flags);
  const auto limits = oracle_limits_for(guards, inst.rho0.size(), inst.sigma.length());

  OracleResult result;
  const char* name = nullptr;
  if (which == "all-transpositions") {
    result = brute_force_opt_all_transpositions(inst.rho0, inst.sigma, limits, witness);
    name = alg::kOracleAll;
  } else if (which == "paid-free") {
    result = brute_force_opt_paid_free(inst.rho0, inst.sigma, limits, witness);
    name = alg::kOraclePaidFree;
  } else {
    result = subset_transfer_opt(inst.rho0, inst.sigma, limits, witness);
    name = alg::kOracleSubset;
  }

  nlohmann::ordered_json out;
  out["algorithm"] = name;
  out["l"] = inst.rho0.size();
  out["m"] = inst.sigma.length();
  out["total"] = result.total;
  if (witness) out["trace"] = trace_json(inst.items, result.trace);
  std::cout << out.dump(2) << "\n";
}

void run_online(const InstanceFlags& flags, const std::string& policy) {
  const Instance inst = build_instance(flags);
  const OnlinePolicy parsed = parse_policy(policy);
  const OnlineResult result = simulate(parsed, inst.rho0, inst.sigma);

  nlohmann::ordered_json out;
  out["policy"] = policy_name(parsed);
  out["l"] = inst.rho0.size();
  out["m"] = inst.sigma.length();
  out["total"] = result.total;
  std::cout << out.dump(2) << "\n";
}

AlgorithmSelection parse_algorithms(const std::vector<std::string>& names) {
  if (names.empty()) return AlgorithmSelection::everything();
  AlgorithmSelection sel;
  sel.opt = false;
  for (const auto& name : names) {
    if (name == "all") {
      sel = AlgorithmSelection::everything();
    } else if (name == alg::kOpt) {
      sel.opt = true;
    } else if (name == alg::kOracleAll) {
      sel.oracle_all = true;
    } else if (name == alg::kOraclePaidFree) {
      sel.oracle_paid_free = true;
    } else if (name == alg::kOracleSubset) {
      sel.oracle_subset = true;
    } else if (name == alg::kMtf) {
      sel.mtf = true;
    } else if (name == alg::kTranspose) {
      sel.transpose = true;
    } else if (name == alg::kFrequencyCount) {
      sel.frequency_count = true;
    } else {
      throw UsageError("unknown algorithm '" + name + "'");
    }
  }
  return sel;
}

struct CompareFlags {
  InstanceFlags instance;
  std::string kind = "uniform";
  int list_size = 4;
  std::int64_t length = 16;
  double zipf_s = 1.0;
  std::uint64_t seed = 0;
  int count = 1;
  std::vector<std::string> algorithms;
  std::string format = "csv";
  bool no_timing = false;
};

void run_compare(const CompareFlags& flags, const GuardFlags& guards) {
  std::vector<ExperimentInstance> instances;
  if (!flags.instance.list_csv.empty()) {
    if (flags.count != 1) throw UsageError("--count applies to generated workloads only");
    Instance inst = build_instance(flags.instance);
    instances.push_back(ExperimentInstance{"cli", std::move(inst.items), std::move(inst.rho0),
                                           std::move(inst.sigma), "explicit", 0});
  } else if (flags.kind == "trace" || !flags.instance.trace_path.empty()) {
    if (flags.instance.trace_path.empty()) throw UsageError("--kind trace needs --trace <path>");
    if (flags.count != 1) throw UsageError("--count applies to generated workloads only");
    WorkloadSpec spec;
    spec.kind = WorkloadKind::Trace;
    spec.trace_path = flags.instance.trace_path;
    instances.push_back(instance_from_spec(spec, "trace"));
  } else {
    for (int i = 0; i < flags.count; ++i) {
      WorkloadSpec spec;
      spec.kind = parse_workload_kind(flags.kind);
      spec.zipf_s = spec.kind == WorkloadKind::Zipf ? flags.zipf_s : 0.0;
      spec.list_size = flags.list_size;
      spec.length = flags.length;
      spec.seed = flags.seed + static_cast<std::uint64_t>(i);
      instances.push_back(
          instance_from_spec(spec, flags.kind + "-s" + std::to_string(spec.seed)));
    }
  }

  int max_l = 1;
  std::int64_t max_m = 0;
  for (const auto& inst : instances) {
    max_l = std::max(max_l, inst.rho0.size());
    max_m = std::max<std::int64_t>(max_m, inst.sigma.length());
  }

  ExperimentOptions options;
  options.solver_limits = solver_limits_for(guards, max_l, max_m);
  options.oracle_limits = oracle_limits_for(guards, max_l, max_m);
  options.timing = !flags.no_timing;

  const Report report = run_experiment(instances, parse_algorithms(flags.algorithms), options);
  const ReportFormat format = parse_report_format(flags.format);
  std::cout << emit_report(report, format);

  // CSV cannot carry counterexample records; stderr keeps them visible.
  if (format == ReportFormat::Csv) {
    for (const auto& record : report.counterexamples) {
      std::cerr << record_to_json(record).dump(2) << "\n";
    }
  }
}

struct GenFlags {
  std::string kind = "uniform";
  int list_size = 4;
  std::int64_t length = 16;
  double zipf_s = 1.0;
  std::uint64_t seed = 0;
};

void run_gen(const GenFlags& flags) {
  WorkloadSpec spec;
  spec.kind = parse_workload_kind(flags.kind);
  spec.zipf_s = spec.kind == WorkloadKind::Zipf ? flags.zipf_s : 0.0;
  spec.list_size = flags.list_size;
  spec.length = flags.length;
  spec.seed = flags.seed;

  const RequestSequence sigma = generate(spec);
  const auto labels = default_labels(spec.list_size);

  std::ostringstream out;
  out << "# kind=" << flags.kind << " l=" << spec.list_size << " m=" << spec.length
      << " s=" << spec.zipf_s << " seed=" << spec.seed << "\n";
  for (int i = 1; i <= sigma.length(); ++i) {
    out << labels[static_cast<size_t>(sigma.at(i))] << "\n";
  }
  std::cout << out.str();
}

void run_check(const std::string& record_path, const GuardFlags& guards) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(read_file(record_path));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("record is not valid JSON: ") + e.what());
  }
  const CounterexampleRecord record = [&] {
    try {
      return record_from_json(parsed);
    } catch (const nlohmann::json::exception& e) {
      throw DomainError(std::string("malformed counterexample record: ") + e.what());
    }
  }();

  const int l = record.rho0.size();
  const std::int64_t m = record.sigma.length();
  std::cout << "instance: l=" << l << " m=" << m << "\n";

  if (record.opt_total && record.opt_schedule) {
    const ScheduleCost cost = schedule_cost(record.rho0, record.sigma, *record.opt_schedule);
    std::cout << "recorded opt: total " << *record.opt_total << ", schedule replays to "
              << cost.total << (cost.total == *record.opt_total ? "" : "  [MISMATCH]") << "\n";
  } else {
    std::cout << "recorded opt: absent\n";
  }
  for (const auto& witness : record.oracle_witnesses) {
    std::cout << "recorded " << witness.algorithm << ": total " << witness.total;
    if (witness.trace.empty() && m > 0) {
      std::cout << " (no trace recorded)\n";
      continue;
    }
    try {
      const std::int64_t replayed = replay_oracle_trace(record.rho0, record.sigma, witness.trace);
      std::cout << ", trace replays to " << replayed
                << (replayed == witness.total ? "" : "  [MISMATCH]") << "\n";
    } catch (const Error& e) {
      std::cout << ", trace invalid: " << e.what() << "\n";
    }
  }

  const auto solver_limits = solver_limits_for(guards, l, m);
  const auto oracle_limits = oracle_limits_for(guards, l, m);
  std::vector<std::pair<std::string, std::int64_t>> fresh;
  auto rerun = [&](const char* name, auto&& fn) {
    try {
      const std::int64_t total = fn();
      std::cout << "fresh " << name << ": " << total << "\n";
      fresh.emplace_back(name, total);
    } catch (const Error& e) {
      std::cout << "fresh " << name << ": error: " << e.what() << "\n";
    }
  };
  rerun(alg::kOpt,
        [&] { return solve_optimal(record.rho0, record.sigma, solver_limits).total; });
  rerun(alg::kOracleAll, [&] {
    return brute_force_opt_all_transpositions(record.rho0, record.sigma, oracle_limits).total;
  });
  rerun(alg::kOraclePaidFree, [&] {
    return brute_force_opt_paid_free(record.rho0, record.sigma, oracle_limits).total;
  });
  rerun(alg::kOracleSubset,
        [&] { return subset_transfer_opt(record.rho0, record.sigma, oracle_limits).total; });

  bool disagree = false;
  for (const auto& [name, total] : fresh) {
    if (total != fresh.front().second) disagree = true;
  }
  if (fresh.empty()) {
    std::cout << "verdict: no exact solver could run this instance\n";
  } else if (disagree) {
    std::cout << "verdict: exact solvers disagree";
    for (const auto& [name, total] : fresh) std::cout << " " << name << "=" << total;
    std::cout << "\n";
  } else {
    std::cout << "verdict: exact solvers agree on total " << fresh.front().second << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::ios_base::sync_with_stdio(false);

  CLI::App app{"List update workbench: exact offline optimum, brute-force oracles, and"
               " online policies over self-organizing lists"};
  app.require_subcommand(1);

  GuardFlags guards;

  auto* opt_cmd = app.add_subcommand("opt", "Solve an instance exactly; prints the schedule");
  InstanceFlags opt_instance;
  add_instance_flags(opt_cmd, opt_instance);
  add_guard_flags(opt_cmd, guards);
  opt_cmd->callback([&] { run_opt(opt_instance, guards); });

  auto* oracle_cmd = app.add_subcommand("oracle", "Run a brute-force optimum over all orderings");
  InstanceFlags oracle_instance;
  std::string oracle_which;
  bool oracle_witness = false;
  add_instance_flags(oracle_cmd, oracle_instance);
  add_guard_flags(oracle_cmd, guards);
  oracle_cmd
      ->add_option("--which", oracle_which, "Accounting the oracle optimizes under")
      ->required()
      ->check(CLI::IsMember({"all-transpositions", "paid-free", "subset-transfer"}));
  oracle_cmd->add_flag("--witness", oracle_witness, "Include the optimal configuration trace");
  oracle_cmd->callback([&] { run_oracle(oracle_instance, guards, oracle_which, oracle_witness); });

  auto* online_cmd = app.add_subcommand("online", "Simulate an online policy");
  InstanceFlags online_instance;
  std::string online_policy;
  add_instance_flags(online_cmd, online_instance);
  online_cmd->add_option("--policy", online_policy, "Online policy to simulate")
      ->required()
      ->check(CLI::IsMember({"mtf", "move-to-front", "transpose", "frequency-count", "fc"}));
  online_cmd->callback([&] { run_online(online_instance, online_policy); });

  auto* compare_cmd =
      app.add_subcommand("compare", "Run algorithms side by side and emit a report");
  CompareFlags compare_flags;
  add_instance_flags(compare_cmd, compare_flags.instance);
  add_guard_flags(compare_cmd, guards);
  compare_cmd->add_option("--kind", compare_flags.kind, "Workload kind when generating instances")
      ->check(CLI::IsMember({"uniform", "zipf", "adversarial", "trace"}));
  compare_cmd->add_option("--l", compare_flags.list_size, "List size for generated workloads");
  compare_cmd->add_option("--m", compare_flags.length, "Requests per generated workload");
  compare_cmd->add_option("--s", compare_flags.zipf_s, "Zipf exponent (kind=zipf)");
  compare_cmd->add_option("--seed", compare_flags.seed, "Generator seed");
  compare_cmd->add_option("--count", compare_flags.count, "Generated instances, seeds seed..seed+count-1")
      ->check(CLI::PositiveNumber);
  compare_cmd
      ->add_option("--algorithms", compare_flags.algorithms,
                   "Comma-separated algorithm names (default: all)")
      ->delimiter(',');
  compare_cmd->add_option("--format", compare_flags.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}));
  compare_cmd->add_flag("--no-timing", compare_flags.no_timing,
                        "Drop wall-time fields so reports diff byte-for-byte");
  compare_cmd->callback([&] { run_compare(compare_flags, guards); });

  auto* gen_cmd = app.add_subcommand("gen", "Generate a workload trace on stdout");
  GenFlags gen_flags;
  gen_cmd->add_option("--kind", gen_flags.kind, "Workload kind")
      ->check(CLI::IsMember({"uniform", "zipf", "adversarial"}));
  gen_cmd->add_option("--l", gen_flags.list_size, "List size");
  gen_cmd->add_option("--m", gen_flags.length, "Number of requests");
  gen_cmd->add_option("--s", gen_flags.zipf_s, "Zipf exponent (kind=zipf)");
  gen_cmd->add_option("--seed", gen_flags.seed, "Generator seed");
  gen_cmd->callback([&] { run_gen(gen_flags); });

  auto* check_cmd =
      app.add_subcommand("check", "Replay a counterexample record and re-run the solvers");
  std::string record_path;
  check_cmd->add_option("record", record_path, "Record JSON file ('-' = stdin)")->required();
  add_guard_flags(check_cmd, guards);
  check_cmd->callback([&] { run_check(record_path, guards); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const listopt::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const listopt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
