#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "listopt/items.hpp"
#include "listopt/oracles.hpp"
#include "listopt/permutation.hpp"
#include "listopt/schedule.hpp"
#include "listopt/sequence.hpp"
#include "listopt/solver.hpp"
#include "listopt/workload.hpp"

namespace listopt {

// Algorithm names as they appear in report rows and CLI flags.
namespace alg {
inline constexpr const char* kOpt = "opt";
inline constexpr const char* kOracleAll = "oracle-all-transpositions";
inline constexpr const char* kOraclePaidFree = "oracle-paid-free";
inline constexpr const char* kOracleSubset = "oracle-subset-transfer";
inline constexpr const char* kMtf = "mtf";
inline constexpr const char* kTranspose = "transpose";
inline constexpr const char* kFrequencyCount = "frequency-count";
}  // namespace alg

struct ExperimentInstance {
  std::string id;
  ItemCatalog items;
  Permutation rho0;
  RequestSequence sigma;
  std::string kind = "explicit";
  std::uint64_t seed = 0;
};

// Materializes a generated workload (or ingests the trace file it names)
// into a runnable instance with default labels and identity rho0.
ExperimentInstance instance_from_spec(const WorkloadSpec& spec, std::string id);

struct AlgorithmSelection {
  bool opt = true;
  bool oracle_all = false;
  bool oracle_paid_free = false;
  bool oracle_subset = false;
  bool mtf = false;
  bool transpose = false;
  bool frequency_count = false;

  static AlgorithmSelection everything();
};

struct ExperimentOptions {
  SolverLimits solver_limits;
  OracleLimits oracle_limits;
  bool timing = true;  // false drops wall-time fields for byte-exact diffing
};

struct ReportRow {
  std::string instance_id;
  int list_size = 0;
  std::int64_t length = 0;
  std::string kind;
  std::uint64_t seed = 0;
  std::string algorithm;
  std::optional<std::int64_t> total;  // absent when this run was rejected
  std::optional<double> ratio_to_opt;
  std::optional<double> wall_ms;
  std::optional<std::int64_t> backward_transfers;  // opt rows: requests parked behind their access position
  std::string error;  // guard violation or domain error text, row kept
};

struct OracleWitnessRecord {
  std::string algorithm;
  std::int64_t total = 0;
  std::vector<OracleStep> trace;
};

// A refutation finding: an instance on which the exact solvers disagreed,
// serialized with both witnesses so it can be replayed verbatim.
struct CounterexampleRecord {
  ItemCatalog items;  // index order doubles as rho0
  Permutation rho0;
  RequestSequence sigma;
  std::optional<std::int64_t> opt_total;  // absent if the solver did not run
  std::optional<Schedule> opt_schedule;
  std::vector<OracleWitnessRecord> oracle_witnesses;
};

struct Report {
  std::vector<ReportRow> rows;  // ordered by instance_id then algorithm
  std::vector<CounterexampleRecord> counterexamples;
};

// Runs every selected algorithm on every instance. Guard violations are
// reported on their row and the run continues. If any two exact solvers
// disagree on an instance, a counterexample record is attached.
Report run_experiment(const std::vector<ExperimentInstance>& instances,
                      const AlgorithmSelection& algorithms,
                      const ExperimentOptions& options = {});

struct CounterexampleSearch {
  int l_min = 2;
  int l_max = 3;
  int m_min = 1;
  int m_max = 4;
  std::int64_t budget = 100000;  // instances examined, exhaustive phase included
  std::uint64_t seed = 0;
  SolverLimits solver_limits;
  OracleLimits oracle_limits;
};

// Exhaustive over all instances for l <= 3, seeded-random beyond. Returns
// the first instance where the solver and an exact oracle disagree,
// with both witnesses; nullopt when the budget passes clean.
std::optional<CounterexampleRecord> find_counterexample(const CounterexampleSearch& search);

enum class ReportFormat { Csv, Json };
ReportFormat parse_report_format(std::string_view name);  // UsageError on unknown names

// CSV columns: instance_id,l,m,kind,seed,algorithm,total_cost,ratio_to_opt,wall_ms.
// JSON mirrors the Report structure. Byte-deterministic for a fixed report.
std::string emit_report(const Report& report, ReportFormat format);

// Serialization shared by the CLI and counterexample records.
nlohmann::ordered_json schedule_to_json(const ItemCatalog& items, const Permutation& rho0,
                                        const RequestSequence& sigma, const Schedule& schedule);
nlohmann::ordered_json record_to_json(const CounterexampleRecord& record);
CounterexampleRecord record_from_json(const nlohmann::json& j);

}  // namespace listopt
