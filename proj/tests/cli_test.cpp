#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "listopt/experiment.hpp"
#include "listopt/online.hpp"

using namespace listopt;

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
};

// Runs a full shell command, capturing whatever it leaves on stdout.
CliRun run_shell(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliRun result;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
    result.out.append(buffer, got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string cli() { return LISTOPT_CLI_PATH; }

CliRun run_cli(const std::string& args) { return run_shell(cli() + " " + args + " 2>/dev/null"); }

CliRun run_cli_stderr(const std::string& args) {
  return run_shell(cli() + " " + args + " 2>&1 1>/dev/null");
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < text.size()) {
    const size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::vector<std::string> cells_of(const std::string& line) {
  std::vector<std::string> cells;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    cells.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return cells;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

constexpr const char* kCsvHeader =
    "instance_id,l,m,kind,seed,algorithm,total_cost,ratio_to_opt,wall_ms";

}  // namespace

TEST_CASE("opt prints the schedule it found") {
  const auto run = run_cli("opt --list a,b --requests b,b");
  REQUIRE(run.exit_code == 0);
  const auto json = nlohmann::json::parse(run.out);
  CHECK(json.at("total") == 3);
  REQUIRE(json.at("steps").size() == 2);
  CHECK(json.at("initial").size() == 2);

  const Schedule direct = solve_optimal(Permutation::identity(2), RequestSequence({1, 1}, 2));
  CHECK(json.at("total") == direct.total);
}

TEST_CASE("oracle subcommand matches the library") {
  const auto run =
      run_cli("oracle --list a,b,c --requests c,b,c --which paid-free --witness");
  REQUIRE(run.exit_code == 0);
  const auto json = nlohmann::json::parse(run.out);
  CHECK(json.at("algorithm") == "oracle-paid-free");
  CHECK(json.at("l") == 3);
  CHECK(json.at("m") == 3);

  const Permutation rho0 = Permutation::identity(3);
  const RequestSequence sigma({2, 1, 2}, 3);
  const OracleResult direct = brute_force_opt_paid_free(rho0, sigma);
  CHECK(json.at("total") == direct.total);

  // the printed witness replays to the reported total
  const ItemCatalog items({"a", "b", "c"});
  std::vector<OracleStep> trace;
  for (const auto& step : json.at("trace")) {
    const auto to_perm = [&](const nlohmann::json& labels) {
      std::vector<int> order;
      for (const auto& label : labels) order.push_back(*items.index_of(label.get<std::string>()));
      return Permutation(order);
    };
    trace.push_back(OracleStep{to_perm(step.at("accessed_in")), to_perm(step.at("after"))});
  }
  CHECK(replay_oracle_trace(rho0, sigma, trace) == direct.total);
}

TEST_CASE("online subcommand reports the canonical policy name") {
  const auto run = run_cli("online --list a,b,c --requests c,c --policy fc");
  REQUIRE(run.exit_code == 0);
  const auto json = nlohmann::json::parse(run.out);
  CHECK(json.at("policy") == "frequency-count");
  const OnlineResult direct =
      simulate(OnlinePolicy::FrequencyCount, Permutation::identity(3), RequestSequence({2, 2}, 3));
  CHECK(json.at("total") == direct.total);

  const auto mtf = run_cli("online --list a,b,c --requests c,c --policy mtf");
  REQUIRE(mtf.exit_code == 0);
  CHECK(nlohmann::json::parse(mtf.out).at("total") == 4);
}

TEST_CASE("traces can arrive on stdin") {
  const auto run = run_shell("printf 'b a b\\n' | " + cli() +
                             " online --policy mtf --trace - 2>/dev/null");
  REQUIRE(run.exit_code == 0);
  const auto json = nlohmann::json::parse(run.out);
  CHECK(json.at("l") == 2);
  CHECK(json.at("m") == 3);
  CHECK(json.at("total") == 5);  // b@1, a@2 then b@2 from [b,a]
}

TEST_CASE("bad invocations exit with usage errors") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("opt --bogus-flag").exit_code == 2);
  CHECK(run_cli("opt").exit_code == 2);  // neither --list nor --trace
  CHECK(run_cli("oracle --list a --requests a").exit_code == 2);  // --which is required
  CHECK(run_cli("opt --list a --requests a --trace x").exit_code == 2);
  CHECK(run_cli("compare --list a,b --requests a --count 2").exit_code == 2);
  CHECK(run_cli("compare --kind trace").exit_code == 2);
  CHECK(run_cli("compare --format xml").exit_code == 2);
}

TEST_CASE("domain errors exit one") {
  CHECK(run_cli("opt --list a,b --requests c").exit_code == 1);
  CHECK(run_cli("opt --trace no-such-file.txt").exit_code == 1);
}

TEST_CASE("help succeeds and names every subcommand") {
  const auto run = run_cli("--help");
  CHECK(run.exit_code == 0);
  for (const char* name : {"opt", "oracle", "online", "compare", "gen", "check"}) {
    CHECK(run.out.find(name) != std::string::npos);
  }
}

TEST_CASE("gen prints its parameters and is deterministic") {
  const auto run = run_cli("gen --kind zipf --l 3 --m 5 --s 0 --seed 7");
  REQUIRE(run.exit_code == 0);
  const auto lines = lines_of(run.out);
  REQUIRE(lines.size() == 6);
  CHECK(lines[0] == "# kind=zipf l=3 m=5 s=0 seed=7");

  CHECK(run_cli("gen --kind zipf --l 3 --m 5 --s 0 --seed 7").out == run.out);

  // exponent zero draws the same requests as uniform
  const auto uniform = run_cli("gen --kind uniform --l 3 --m 5 --seed 7");
  REQUIRE(uniform.exit_code == 0);
  CHECK(run.out.substr(run.out.find('\n')) == uniform.out.substr(uniform.out.find('\n')));
}

TEST_CASE("generated traces feed straight back through compare") {
  const auto gen = run_cli("gen --kind adversarial --l 3 --m 6 --seed 1");
  REQUIRE(gen.exit_code == 0);
  const std::string path = "cli_test_trace.txt";
  write_file(path, gen.out);

  const auto run =
      run_cli("compare --trace " + path + " --algorithms opt,mtf --no-timing");
  REQUIRE(run.exit_code == 0);
  const auto lines = lines_of(run.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == kCsvHeader);

  const auto ingested = ingest_trace(gen.out);
  const Permutation rho0 = Permutation::identity(ingested.items.size());
  const std::int64_t opt_total = solve_optimal(rho0, ingested.sequence).total;
  const std::int64_t mtf_total = simulate(OnlinePolicy::MoveToFront, rho0, ingested.sequence).total;

  // rows sort by algorithm name, so mtf precedes opt
  const auto mtf_cells = cells_of(lines[1]);
  REQUIRE(mtf_cells.size() == 9);
  CHECK(mtf_cells[0] == "trace");
  CHECK(mtf_cells[1] == "3");
  CHECK(mtf_cells[2] == "6");
  CHECK(mtf_cells[3] == "trace");
  CHECK(mtf_cells[5] == "mtf");
  CHECK(mtf_cells[6] == std::to_string(mtf_total));
  CHECK(mtf_cells[8].empty());

  const auto opt_cells = cells_of(lines[2]);
  REQUIRE(opt_cells.size() == 9);
  CHECK(opt_cells[5] == "opt");
  CHECK(opt_cells[6] == std::to_string(opt_total));
  const double want_ratio =
      static_cast<double>(mtf_total) / static_cast<double>(opt_total);
  CHECK(std::stod(mtf_cells[7]) == doctest::Approx(want_ratio).epsilon(1e-6));
}

TEST_CASE("compare reports are byte-stable without timing") {
  const std::string args =
      "compare --kind zipf --l 4 --m 12 --s 1.0 --seed 3 --no-timing";
  const auto first = run_cli(args);
  REQUIRE(first.exit_code == 0);
  CHECK(lines_of(first.out)[0] == kCsvHeader);
  CHECK(lines_of(first.out).size() == 8);  // seven algorithms by default
  CHECK(run_cli(args).out == first.out);

  // with timing on the run still succeeds
  CHECK(run_cli("compare --kind zipf --l 4 --m 12 --seed 3").exit_code == 0);
}

TEST_CASE("compare emits parseable json") {
  const auto run =
      run_cli("compare --kind uniform --l 3 --m 8 --seed 5 --count 2 --format json --no-timing");
  REQUIRE(run.exit_code == 0);
  const auto json = nlohmann::json::parse(run.out);
  REQUIRE(json.at("rows").size() == 14);
  CHECK(json.at("counterexamples").empty());
  for (const auto& row : json.at("rows")) {
    CHECK(row.contains("instance_id"));
    CHECK(row.at("l") == 3);
    CHECK(row.at("m") == 8);
    CHECK(row.at("kind") == "uniform");
    CHECK(row.contains("seed"));
    CHECK(row.contains("algorithm"));
    CHECK(row.at("total_cost").is_number_integer());
    CHECK(row.at("ratio_to_opt").get<double>() >= 1.0 - 1e-12);
    CHECK(!row.contains("wall_ms"));
  }
}

TEST_CASE("check replays a recorded instance") {
  const ItemCatalog items({"a", "b", "c"});
  const Permutation rho0({2, 0, 1});
  const RequestSequence sigma({1, 2, 1}, 3);
  const Schedule schedule = solve_optimal(rho0, sigma);
  const OracleResult all = brute_force_opt_all_transpositions(rho0, sigma, {}, true);
  const CounterexampleRecord record{
      items, rho0, sigma, schedule.total, schedule,
      {OracleWitnessRecord{alg::kOracleAll, all.total, all.trace}}};
  const std::string path = "cli_test_record.json";
  write_file(path, record_to_json(record).dump(2) + "\n");

  const auto run = run_cli("check " + path);
  REQUIRE(run.exit_code == 0);
  CHECK(run.out.find("instance: l=3 m=3") != std::string::npos);
  CHECK(run.out.find("verdict: exact solvers agree on total") != std::string::npos);
  CHECK(run.out.find("[MISMATCH]") == std::string::npos);

  const auto piped = run_shell(cli() + " check - < " + path + " 2>/dev/null");
  CHECK(piped.exit_code == 0);
  CHECK(piped.out == run.out);

  write_file("cli_test_bad_record.json", "not json at all\n");
  CHECK(run_cli("check cli_test_bad_record.json").exit_code == 1);
}

TEST_CASE("list size guards resolve flag over environment over default") {
  CHECK(run_shell("LISTOPT_MAX_L=3 " + cli() +
                  " opt --list a,b,c,d --requests a 2>/dev/null")
            .exit_code == 1);
  CHECK(run_shell("LISTOPT_MAX_L=abc " + cli() + " opt --list a --requests a 2>/dev/null")
            .exit_code == 2);
  CHECK(run_shell("LISTOPT_MAX_L=3 " + cli() +
                  " opt --list a,b,c,d --requests a --max-l 8 2>/dev/null")
            .exit_code == 0);
  CHECK(run_cli("oracle --list a,b,c,d,e,f --requests a --which subset-transfer").exit_code == 1);
}

TEST_CASE("force lifts the guard and says so") {
  const auto run = run_cli_stderr("opt --list a,b,c,d --requests a --max-l 3 --force");
  CHECK(run.exit_code == 0);
  CHECK(run.out.find("guard lifted to l=4") != std::string::npos);
  CHECK(run.out.find("MiB") != std::string::npos);

  const auto oracle =
      run_cli("oracle --list a,b,c,d,e,f --requests a --which subset-transfer --force");
  CHECK(oracle.exit_code == 0);
  CHECK(nlohmann::json::parse(oracle.out).at("total") == 1);
}
