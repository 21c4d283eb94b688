#pragma once

#include <cstdint>
#include <vector>

#include "listopt/permutation.hpp"
#include "listopt/sequence.hpp"

namespace listopt {

// Per-request service cost: the position the request is accessed at plus
// the transpositions of the element transfers around that access.
struct CostBreakdown {
  std::int64_t reorg = 0;
  std::int64_t access = 0;
  std::int64_t total() const { return reorg + access; }
};

// An offline solution in element-transfer form: permute the list to
// `initial` up front, then service request i with two element transfers
// of the requested item around its access. The item is first moved from
// its current position p to access_at[i-1] and accessed there, then
// parked at park_at[i-1] before the next request is served.
//
// A forward move before the access costs the same as accessing in place
// (|p-j| + j = p for j <= p), so access_at expresses the classic free
// forward exchange; a park behind the access position is the paid
// backward drift an optimal service sometimes needs. Schedules with
// park_at[i] == access_at[i] throughout are plain one-transfer-per-
// request solutions.
struct Schedule {
  Permutation initial;
  std::vector<int> access_at;  // 1-based position request i is accessed at
  std::vector<int> park_at;    // 1-based position it is left at afterwards
  std::vector<CostBreakdown> breakdown;
  std::int64_t total = 0;
};

struct ScheduleCost {
  std::int64_t total = 0;
  std::vector<CostBreakdown> per_request;
};

// Replays the schedule against rho0/sigma:
//   total = kendall_tau(rho0, initial)
//         + sum_i (|p_i - t_i| + t_i + |t_i - k_i|)
// where p_i is the request's position when its service starts, t_i =
// access_at[i-1] the position it is moved to and accessed at, and k_i =
// park_at[i-1] the position it is left at.
ScheduleCost schedule_cost(const Permutation& rho0, const RequestSequence& sigma,
                           const Schedule& s);

// Positions p_i each request holds before its service starts, by replay.
std::vector<int> schedule_pre_positions(const RequestSequence& sigma, const Schedule& s);

}  // namespace listopt
