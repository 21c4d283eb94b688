#include "listopt/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "listopt/errors.hpp"
#include "listopt/online.hpp"

namespace listopt {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read trace file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct RunOutcome {
  std::optional<std::int64_t> total;
  std::optional<double> wall_ms;
  std::string error;
};

template <typename Fn>
RunOutcome timed_total(bool timing, Fn&& fn) {
  RunOutcome out;
  const auto start = Clock::now();
  try {
    out.total = fn();
    if (timing) out.wall_ms = elapsed_ms(start);
  } catch (const Error& e) {
    out.error = e.what();
  }
  return out;
}

std::optional<double> ratio_to(const std::optional<std::int64_t>& total,
                               const std::optional<std::int64_t>& reference) {
  if (!total || !reference) return std::nullopt;
  if (*reference == 0) return *total == 0 ? std::optional<double>(1.0) : std::nullopt;
  return static_cast<double>(*total) / static_cast<double>(*reference);
}

std::vector<std::string> ordering_labels(const ItemCatalog& items, const Permutation& rho) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(rho.size()));
  for (int p = 1; p <= rho.size(); ++p) labels.push_back(items.label(rho.item_at(p)));
  return labels;
}

Permutation ordering_from_labels(const ItemCatalog& items,
                                 const std::vector<std::string>& labels) {
  std::vector<int> order;
  order.reserve(labels.size());
  for (const auto& label : labels) {
    const auto idx = items.index_of(label);
    if (!idx) throw DomainError("unknown item label '" + label + "'");
    order.push_back(*idx);
  }
  return Permutation(std::move(order));
}

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

// Witness records for every oracle named in `which` (rerun with traces).
std::vector<OracleWitnessRecord> collect_witnesses(const Permutation& rho0,
                                                   const RequestSequence& sigma,
                                                   const OracleLimits& limits,
                                                   const std::vector<std::string>& which) {
  std::vector<OracleWitnessRecord> out;
  for (const auto& name : which) {
    OracleResult result;
    if (name == alg::kOracleAll) {
      result = brute_force_opt_all_transpositions(rho0, sigma, limits, true);
    } else if (name == alg::kOraclePaidFree) {
      result = brute_force_opt_paid_free(rho0, sigma, limits, true);
    } else if (name == alg::kOracleSubset) {
      result = subset_transfer_opt(rho0, sigma, limits, true);
    } else {
      continue;
    }
    out.push_back(OracleWitnessRecord{name, result.total, std::move(result.trace)});
  }
  return out;
}

}  // namespace

AlgorithmSelection AlgorithmSelection::everything() {
  AlgorithmSelection s;
  s.opt = s.oracle_all = s.oracle_paid_free = s.oracle_subset = true;
  s.mtf = s.transpose = s.frequency_count = true;
  return s;
}

ExperimentInstance instance_from_spec(const WorkloadSpec& spec, std::string id) {
  if (spec.kind == WorkloadKind::Trace) {
    auto ingested = ingest_trace(read_file(spec.trace_path));
    const int l = ingested.items.size();
    return ExperimentInstance{std::move(id), std::move(ingested.items), Permutation::identity(l),
                              std::move(ingested.sequence), "trace", spec.seed};
  }
  RequestSequence sigma = generate(spec);
  return ExperimentInstance{std::move(id), ItemCatalog(default_labels(spec.list_size)),
                            Permutation::identity(spec.list_size), std::move(sigma),
                            workload_kind_name(spec.kind), spec.seed};
}

Report run_experiment(const std::vector<ExperimentInstance>& instances,
                      const AlgorithmSelection& algorithms, const ExperimentOptions& options) {
  Report report;
  for (const auto& inst : instances) {
    std::optional<Schedule> opt_schedule;
    RunOutcome opt_run;
    if (algorithms.opt) {
      const auto start = Clock::now();
      try {
        opt_schedule = solve_optimal(inst.rho0, inst.sigma, options.solver_limits);
        opt_run.total = opt_schedule->total;
        if (options.timing) opt_run.wall_ms = elapsed_ms(start);
      } catch (const Error& e) {
        opt_run.error = e.what();
      }
    }

    RunOutcome oracle_all, oracle_paid, oracle_subset;
    if (algorithms.oracle_all) {
      oracle_all = timed_total(options.timing, [&] {
        return brute_force_opt_all_transpositions(inst.rho0, inst.sigma, options.oracle_limits)
            .total;
      });
    }
    if (algorithms.oracle_paid_free) {
      oracle_paid = timed_total(options.timing, [&] {
        return brute_force_opt_paid_free(inst.rho0, inst.sigma, options.oracle_limits).total;
      });
    }
    if (algorithms.oracle_subset) {
      oracle_subset = timed_total(options.timing, [&] {
        return subset_transfer_opt(inst.rho0, inst.sigma, options.oracle_limits).total;
      });
    }

    RunOutcome mtf, transpose, freq;
    if (algorithms.mtf) {
      mtf = timed_total(options.timing, [&] {
        return simulate(OnlinePolicy::MoveToFront, inst.rho0, inst.sigma).total;
      });
    }
    if (algorithms.transpose) {
      transpose = timed_total(options.timing, [&] {
        return simulate(OnlinePolicy::Transpose, inst.rho0, inst.sigma).total;
      });
    }
    if (algorithms.frequency_count) {
      freq = timed_total(options.timing, [&] {
        return simulate(OnlinePolicy::FrequencyCount, inst.rho0, inst.sigma).total;
      });
    }

    // OPT reference for ratios: the solver when it ran, else the first
    // exact oracle that did.
    std::optional<std::int64_t> reference = opt_run.total;
    for (const auto* fallback : {&oracle_all, &oracle_subset, &oracle_paid}) {
      if (!reference) reference = fallback->total;
    }

    auto push_row = [&](const char* name, const RunOutcome& run,
                        std::optional<std::int64_t> backward = std::nullopt) {
      ReportRow row;
      row.instance_id = inst.id;
      row.list_size = inst.rho0.size();
      row.length = inst.sigma.length();
      row.kind = inst.kind;
      row.seed = inst.seed;
      row.algorithm = name;
      row.total = run.total;
      row.ratio_to_opt = ratio_to(run.total, reference);
      row.wall_ms = run.wall_ms;
      row.backward_transfers = backward;
      row.error = run.error;
      report.rows.push_back(std::move(row));
    };

    if (algorithms.frequency_count) push_row(alg::kFrequencyCount, freq);
    if (algorithms.mtf) push_row(alg::kMtf, mtf);
    if (algorithms.opt) {
      std::optional<std::int64_t> backward;
      if (opt_schedule) {
        std::int64_t count = 0;
        for (size_t i = 0; i < opt_schedule->access_at.size(); ++i) {
          if (opt_schedule->park_at[i] > opt_schedule->access_at[i]) ++count;
        }
        backward = count;
      }
      push_row(alg::kOpt, opt_run, backward);
    }
    if (algorithms.oracle_all) push_row(alg::kOracleAll, oracle_all);
    if (algorithms.oracle_paid_free) push_row(alg::kOraclePaidFree, oracle_paid);
    if (algorithms.oracle_subset) push_row(alg::kOracleSubset, oracle_subset);
    if (algorithms.transpose) push_row(alg::kTranspose, transpose);

    // Exact solvers must agree; a disagreement becomes a replayable
    // record, never a silent mismatch.
    std::vector<std::pair<std::string, std::int64_t>> exact;
    if (opt_run.total) exact.emplace_back(alg::kOpt, *opt_run.total);
    if (oracle_all.total) exact.emplace_back(alg::kOracleAll, *oracle_all.total);
    if (oracle_paid.total) exact.emplace_back(alg::kOraclePaidFree, *oracle_paid.total);
    if (oracle_subset.total) exact.emplace_back(alg::kOracleSubset, *oracle_subset.total);
    bool disagree = false;
    for (size_t i = 1; i < exact.size(); ++i) {
      if (exact[i].second != exact[0].second) disagree = true;
    }
    if (disagree) {
      std::vector<std::string> names;
      for (const auto& [name, total] : exact) {
        if (name != alg::kOpt) names.push_back(name);
      }
      report.counterexamples.push_back(CounterexampleRecord{
          inst.items, inst.rho0, inst.sigma, opt_run.total, opt_schedule,
          collect_witnesses(inst.rho0, inst.sigma, options.oracle_limits, names)});
    }
  }

  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ReportRow& a, const ReportRow& b) {
                     if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
                     return a.algorithm < b.algorithm;
                   });
  return report;
}

std::optional<CounterexampleRecord> find_counterexample(const CounterexampleSearch& search) {
  if (search.l_min < 1 || search.l_min > search.l_max) {
    throw DomainError("bad list-size range [" + std::to_string(search.l_min) + ".." +
                      std::to_string(search.l_max) + "]");
  }
  if (search.m_min < 0 || search.m_min > search.m_max) {
    throw DomainError("bad sequence-length range [" + std::to_string(search.m_min) + ".." +
                      std::to_string(search.m_max) + "]");
  }
  if (search.l_max > search.oracle_limits.max_list_size) {
    throw ConfigError("search range reaches list size " + std::to_string(search.l_max) +
                      ", above the oracle bound of " +
                      std::to_string(search.oracle_limits.max_list_size));
  }

  std::int64_t remaining = search.budget;

  auto check = [&](const Permutation& rho0,
                   const RequestSequence& sigma) -> std::optional<CounterexampleRecord> {
    const Schedule schedule = solve_optimal(rho0, sigma, search.solver_limits);
    const auto all =
        brute_force_opt_all_transpositions(rho0, sigma, search.oracle_limits).total;
    const auto paid = brute_force_opt_paid_free(rho0, sigma, search.oracle_limits).total;
    const auto subset = subset_transfer_opt(rho0, sigma, search.oracle_limits).total;
    if (schedule.total == all && schedule.total == paid && schedule.total == subset) {
      return std::nullopt;
    }
    return CounterexampleRecord{
        ItemCatalog(default_labels(rho0.size())), rho0, sigma, schedule.total, schedule,
        collect_witnesses(rho0, sigma, search.oracle_limits,
                          {alg::kOracleAll, alg::kOraclePaidFree, alg::kOracleSubset})};
  };

  // Exhaustive sweep while the state space stays enumerable.
  for (int l = search.l_min; l <= std::min(search.l_max, 3); ++l) {
    const std::int64_t orderings = factorial(l);
    for (std::int64_t r = 0; r < orderings; ++r) {
      const Permutation rho0 = unrank(r, l);
      for (int m = search.m_min; m <= search.m_max; ++m) {
        std::vector<int> digits(static_cast<size_t>(m), 0);
        while (true) {
          if (remaining == 0) return std::nullopt;
          --remaining;
          auto found = check(rho0, RequestSequence(digits, l));
          if (found) return found;
          int carry = m - 1;
          while (carry >= 0 && ++digits[static_cast<size_t>(carry)] == l) {
            digits[static_cast<size_t>(carry)] = 0;
            --carry;
          }
          if (carry < 0) break;
        }
      }
    }
  }

  // Seeded random instances beyond the exhaustive range, round-robin
  // over list sizes so every size gets budget.
  std::vector<int> sizes;
  for (int l = std::max(search.l_min, 4); l <= search.l_max; ++l) sizes.push_back(l);
  if (!sizes.empty()) {
    std::mt19937_64 rng(search.seed);
    while (remaining > 0) {
      for (int l : sizes) {
        if (remaining == 0) break;
        --remaining;
        const Permutation rho0 =
            unrank(static_cast<std::int64_t>(uniform_index(rng, static_cast<std::uint64_t>(factorial(l)))), l);
        const int m =
            search.m_min + static_cast<int>(uniform_index(
                               rng, static_cast<std::uint64_t>(search.m_max - search.m_min + 1)));
        std::vector<int> requests(static_cast<size_t>(m));
        for (auto& r : requests) {
          r = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(l)));
        }
        auto found = check(rho0, RequestSequence(std::move(requests), l));
        if (found) return found;
      }
    }
  }
  return std::nullopt;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw UsageError("unknown report format '" + std::string(name) + "' (expected csv or json)");
}

nlohmann::ordered_json schedule_to_json(const ItemCatalog& items, const Permutation& rho0,
                                        const RequestSequence& sigma, const Schedule& schedule) {
  const ScheduleCost cost = schedule_cost(rho0, sigma, schedule);
  const auto pre = schedule_pre_positions(sigma, schedule);
  nlohmann::ordered_json j;
  j["initial"] = ordering_labels(items, schedule.initial);
  j["initial_reorg_cost"] = kendall_tau(rho0, schedule.initial);
  auto steps = nlohmann::ordered_json::array();
  for (int i = 1; i <= sigma.length(); ++i) {
    const auto& step = cost.per_request[static_cast<size_t>(i - 1)];
    steps.push_back({{"request", items.label(sigma.at(i))},
                     {"pre_position", pre[static_cast<size_t>(i - 1)]},
                     {"access_at", schedule.access_at[static_cast<size_t>(i - 1)]},
                     {"park_at", schedule.park_at[static_cast<size_t>(i - 1)]},
                     {"reorg_cost", step.reorg},
                     {"access_cost", step.access}});
  }
  j["steps"] = std::move(steps);
  j["total"] = cost.total;
  return j;
}

nlohmann::ordered_json record_to_json(const CounterexampleRecord& record) {
  nlohmann::ordered_json j;
  j["type"] = "counterexample";
  j["list"] = ordering_labels(record.items, record.rho0);
  auto requests = nlohmann::ordered_json::array();
  for (int i = 1; i <= record.sigma.length(); ++i) {
    requests.push_back(record.items.label(record.sigma.at(i)));
  }
  j["requests"] = std::move(requests);
  if (record.opt_total && record.opt_schedule) {
    j["opt"] = {{"total", *record.opt_total},
                {"schedule", schedule_to_json(record.items, record.rho0, record.sigma,
                                              *record.opt_schedule)}};
  } else {
    j["opt"] = nullptr;
  }
  auto oracles = nlohmann::ordered_json::array();
  for (const auto& witness : record.oracle_witnesses) {
    nlohmann::ordered_json w;
    w["algorithm"] = witness.algorithm;
    w["total"] = witness.total;
    auto trace = nlohmann::ordered_json::array();
    for (const auto& step : witness.trace) {
      trace.push_back({{"accessed_in", ordering_labels(record.items, step.accessed_in)},
                       {"after", ordering_labels(record.items, step.after)}});
    }
    w["trace"] = std::move(trace);
    oracles.push_back(std::move(w));
  }
  j["oracles"] = std::move(oracles);
  return j;
}

CounterexampleRecord record_from_json(const nlohmann::json& j) {
  ItemCatalog items(j.at("list").get<std::vector<std::string>>());
  // the serialized list order is rho0
  Permutation rho0 = Permutation::identity(items.size());
  std::vector<int> requests;
  for (const auto& token : j.at("requests")) {
    const auto idx = items.index_of(token.get<std::string>());
    if (!idx) throw DomainError("record request names unknown item '" + token.get<std::string>() + "'");
    requests.push_back(*idx);
  }
  RequestSequence sigma(std::move(requests), items.size());

  std::optional<std::int64_t> opt_total;
  std::optional<Schedule> opt_schedule;
  if (j.contains("opt") && !j.at("opt").is_null()) {
    const auto& opt = j.at("opt");
    opt_total = opt.at("total").get<std::int64_t>();
    const auto& sched = opt.at("schedule");
    Schedule schedule{
        ordering_from_labels(items, sched.at("initial").get<std::vector<std::string>>()),
        {},
        {},
        {},
        0};
    for (const auto& step : sched.at("steps")) {
      schedule.access_at.push_back(step.at("access_at").get<int>());
      schedule.park_at.push_back(step.at("park_at").get<int>());
    }
    ScheduleCost cost = schedule_cost(rho0, sigma, schedule);
    schedule.breakdown = std::move(cost.per_request);
    schedule.total = cost.total;
    opt_schedule = std::move(schedule);
  }

  std::vector<OracleWitnessRecord> witnesses;
  if (j.contains("oracles")) {
    for (const auto& w : j.at("oracles")) {
      OracleWitnessRecord record{w.at("algorithm").get<std::string>(),
                                 w.at("total").get<std::int64_t>(),
                                 {}};
      if (w.contains("trace")) {
        for (const auto& step : w.at("trace")) {
          record.trace.push_back(OracleStep{
              ordering_from_labels(items, step.at("accessed_in").get<std::vector<std::string>>()),
              ordering_from_labels(items, step.at("after").get<std::vector<std::string>>())});
        }
      }
      witnesses.push_back(std::move(record));
    }
  }
  return CounterexampleRecord{std::move(items), std::move(rho0),      std::move(sigma),
                              opt_total,        std::move(opt_schedule), std::move(witnesses)};
}

std::string emit_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::string out = "instance_id,l,m,kind,seed,algorithm,total_cost,ratio_to_opt,wall_ms\n";
    for (const auto& row : report.rows) {
      out += row.instance_id;
      out += ',';
      out += std::to_string(row.list_size);
      out += ',';
      out += std::to_string(row.length);
      out += ',';
      out += row.kind;
      out += ',';
      out += std::to_string(row.seed);
      out += ',';
      out += row.algorithm;
      out += ',';
      if (row.total) out += std::to_string(*row.total);
      out += ',';
      if (row.ratio_to_opt) out += format_fixed(*row.ratio_to_opt, 6);
      out += ',';
      if (row.wall_ms) out += format_fixed(*row.wall_ms, 3);
      out += '\n';
    }
    return out;
  }

  nlohmann::ordered_json j;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json r;
    r["instance_id"] = row.instance_id;
    r["l"] = row.list_size;
    r["m"] = row.length;
    r["kind"] = row.kind;
    r["seed"] = row.seed;
    r["algorithm"] = row.algorithm;
    if (row.total) r["total_cost"] = *row.total;
    if (row.ratio_to_opt) r["ratio_to_opt"] = *row.ratio_to_opt;
    if (row.wall_ms) r["wall_ms"] = *row.wall_ms;
    if (row.backward_transfers) r["backward_transfers"] = *row.backward_transfers;
    if (!row.error.empty()) r["error"] = row.error;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  auto counterexamples = nlohmann::ordered_json::array();
  for (const auto& record : report.counterexamples) {
    counterexamples.push_back(record_to_json(record));
  }
  j["counterexamples"] = std::move(counterexamples);
  return j.dump(2) + "\n";
}

}  // namespace listopt
