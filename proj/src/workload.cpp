#include "listopt/workload.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "listopt/errors.hpp"
#include "listopt/permutation.hpp"

namespace listopt {

std::string workload_kind_name(WorkloadKind kind) {
  switch (kind) {
    case WorkloadKind::Uniform: return "uniform";
    case WorkloadKind::Zipf: return "zipf";
    case WorkloadKind::Adversarial: return "adversarial";
    case WorkloadKind::Trace: return "trace";
  }
  throw DomainError("unknown workload kind");
}

WorkloadKind parse_workload_kind(std::string_view name) {
  if (name == "uniform") return WorkloadKind::Uniform;
  if (name == "zipf") return WorkloadKind::Zipf;
  if (name == "adversarial") return WorkloadKind::Adversarial;
  if (name == "trace") return WorkloadKind::Trace;
  throw DomainError("unknown workload kind '" + std::string(name) + "'");
}

std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  if (n == 0) throw DomainError("uniform_index over an empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % n;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

RequestSequence generate(const WorkloadSpec& spec) {
  if (spec.kind == WorkloadKind::Trace) {
    throw DomainError("trace workloads are read with ingest_trace, not generated");
  }
  if (spec.list_size < 1) throw DomainError("workload needs at least one item");
  if (spec.length < 0) throw DomainError("negative workload length");
  if (spec.zipf_s < 0) throw DomainError("zipf exponent must be nonnegative");

  const int l = spec.list_size;
  std::vector<int> requests;
  requests.reserve(static_cast<size_t>(spec.length));

  if (spec.kind == WorkloadKind::Adversarial) {
    // always request the item currently last in a move-to-front list
    std::vector<int> order = Permutation::identity(l).order();
    for (std::int64_t i = 0; i < spec.length; ++i) {
      const int item = order.back();
      requests.push_back(item);
      order.pop_back();
      order.insert(order.begin(), item);
    }
    return RequestSequence(std::move(requests), l);
  }

  // Uniform and zipf share one cumulative-weight inversion; uniform is
  // the s = 0 case, so zipf(0) reproduces uniform byte for byte.
  const double s = spec.kind == WorkloadKind::Zipf ? spec.zipf_s : 0.0;
  std::vector<double> cumulative(static_cast<size_t>(l));
  double total = 0.0;
  for (int i = 0; i < l; ++i) {
    total += std::pow(static_cast<double>(i + 1), -s);
    cumulative[static_cast<size_t>(i)] = total;
  }
  std::mt19937_64 rng(spec.seed);
  for (std::int64_t i = 0; i < spec.length; ++i) {
    const double u = unit_double(rng) * total;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    const auto idx = std::min<std::ptrdiff_t>(it - cumulative.begin(), l - 1);
    requests.push_back(static_cast<int>(idx));
  }
  return RequestSequence(std::move(requests), l);
}

std::vector<std::string> trace_tokens(std::string_view text, const IngestLimits& limits) {
  std::vector<std::string> tokens;

  size_t line_start = 0;
  while (line_start <= text.size()) {
    const size_t line_end = std::min(text.find('\n', line_start), text.size());
    std::string_view line = text.substr(line_start, line_end - line_start);
    line_start = line_end + 1;

    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;

    size_t pos = first;
    while (pos < line.size()) {
      const size_t end = std::min(line.find_first_of(" \t\r", pos), line.size());
      if (end > pos) {
        if (static_cast<std::int64_t>(tokens.size()) >= limits.max_tokens) {
          throw ConfigError("trace exceeds the configured maximum of " +
                            std::to_string(limits.max_tokens) + " tokens");
        }
        tokens.emplace_back(line.substr(pos, end - pos));
      }
      pos = line.find_first_not_of(" \t\r", end);
      if (pos == std::string_view::npos) break;
    }
  }
  return tokens;
}

IngestedTrace ingest_trace(std::string_view text, const IngestLimits& limits) {
  std::vector<std::string> labels;
  std::vector<int> requests;
  std::unordered_map<std::string, int> index;
  for (auto& token : trace_tokens(text, limits)) {
    auto [it, inserted] = index.emplace(token, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(std::move(token));
    requests.push_back(it->second);
  }

  if (labels.empty()) throw DomainError("trace contains no requests");
  const int l = static_cast<int>(labels.size());
  return IngestedTrace{ItemCatalog(std::move(labels)), RequestSequence(std::move(requests), l)};
}

}  // namespace listopt
