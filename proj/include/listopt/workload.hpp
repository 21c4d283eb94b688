#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "listopt/items.hpp"
#include "listopt/sequence.hpp"

namespace listopt {

enum class WorkloadKind {
  Uniform,
  Zipf,
  Adversarial,
  Trace,
};

std::string workload_kind_name(WorkloadKind kind);
WorkloadKind parse_workload_kind(std::string_view name);

struct WorkloadSpec {
  WorkloadKind kind = WorkloadKind::Uniform;
  double zipf_s = 0.0;  // zipf exponent, >= 0
  int list_size = 1;
  std::int64_t length = 0;
  std::uint64_t seed = 0;
  std::string trace_path;  // kind == Trace only
};

// Deterministic in the spec's seed. The generator is std::mt19937_64
// seeded directly with spec.seed; uniform and zipf draw through the same
// cumulative-weight inversion, so zipf with s = 0 reproduces uniform
// byte for byte. Adversarial requests the item currently last in a
// move-to-front list starting from the identity ordering.
RequestSequence generate(const WorkloadSpec& spec);

struct IngestLimits {
  std::int64_t max_tokens = 10'000'000;
};

struct IngestedTrace {
  ItemCatalog items;
  RequestSequence sequence;
};

// Whitespace-separated tokens become requests; lines whose first
// non-blank character is '#' are ignored. The universe is the distinct
// tokens in first-appearance order.
IngestedTrace ingest_trace(std::string_view text, const IngestLimits& limits = {});

// The tokenization step of ingest_trace alone, for callers that map the
// tokens onto an already-known universe.
std::vector<std::string> trace_tokens(std::string_view text, const IngestLimits& limits = {});

// Shared helpers for seeded sampling, kept explicit so report bytes are
// reproducible for a fixed seed.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n);  // rejection sampled
double unit_double(std::mt19937_64& rng);                            // 53-bit [0,1)

}  // namespace listopt
