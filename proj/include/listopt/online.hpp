#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "listopt/permutation.hpp"
#include "listopt/sequence.hpp"

namespace listopt {

enum class OnlinePolicy {
  MoveToFront,
  Transpose,
  FrequencyCount,
};

// Name used in CLI flags and report rows.
std::string policy_name(OnlinePolicy policy);
OnlinePolicy parse_policy(std::string_view name);  // DomainError on unknown names

struct OnlineResult {
  std::int64_t total = 0;
  std::vector<std::int64_t> per_request;
};

// Classic free-exchange accounting: request i costs its current position,
// then the policy moves the accessed item forward for free.
//   move-to-front:   to the head
//   transpose:       one step forward
//   frequency-count: list kept sorted by decreasing access count, stable
OnlineResult simulate(OnlinePolicy policy, const Permutation& rho0,
                      const RequestSequence& sigma);

}  // namespace listopt
