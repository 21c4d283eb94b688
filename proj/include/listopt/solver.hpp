#pragma once

#include <cstdint>
#include <vector>

#include "listopt/perm_space.hpp"
#include "listopt/permutation.hpp"
#include "listopt/schedule.hpp"
#include "listopt/sequence.hpp"

namespace listopt {

struct SolverLimits {
  // Largest list size for which l!-indexed layers may be allocated.
  int max_list_size = 8;
};

// One frontier of the shortest-path sweep. dist[r] is the cheapest cost
// of any service prefix that reaches the rank-r ordering at this point
// of the sweep; choice[r] is the rank of the ordering it came from
// (kInitialChoice in the first layer, where the predecessor is rho0).
struct Layer {
  static constexpr std::uint32_t kInitialChoice = 0xffffffffu;
  std::vector<std::int64_t> dist;
  std::vector<std::uint32_t> choice;
};

// Forward shortest-path sweep over a layered network whose layer-i nodes
// are the l! orderings the i-th request can be accessed in. Between two
// accesses the service may move each of the two involved items once:
//
//   - the item just accessed is parked anywhere (relax_park, cost
//     |p - j|), covering the paid backward drift an optimal service
//     sometimes needs before the item is requested again;
//   - the upcoming request is moved to the position it will be accessed
//     at (relax, cost |p - j| + j). For forward moves |p - j| + j = p,
//     which is the classic free forward exchange; backward moves are
//     dominated but kept for uniformity.
//
// The arc from the source is a jump from rho0 to any ordering rho at
// Kendall tau cost with the first access folded in, so the first layer's
// distance at rho is kendall_tau(rho0, rho) + position of the first
// request in rho. A one-transfer-per-request sweep (either half alone)
// misses some optima; the two halves together match the exact oracles.
//
// Construction cost depends only on the list size; one solver instance
// can be reused across any number of solve() calls and is safe for
// concurrent read-only use.
class ActionNetworkSolver {
 public:
  explicit ActionNetworkSolver(int list_size, const SolverLimits& limits = {});

  Layer initial_layer(const Permutation& rho0, int first_request) const;

  // Relaxes the access half-step: moves `request` to every position j
  // and charges |p - j| transpositions plus the access at j. Ties are
  // broken toward the smallest predecessor rank (the target j of an arc
  // into a node is fixed by the node's ordering, so the predecessor rank
  // is what actually varies).
  Layer relax(const Layer& prev, int request) const;

  // Relaxes the parking half-step: moves the just-accessed `request` to
  // every position j for |p - j| transpositions, no access term. Same
  // tie-break as relax().
  Layer relax_park(const Layer& prev, int request) const;

  Schedule solve(const Permutation& rho0, const RequestSequence& sigma) const;

  const PermSpace& space() const { return space_; }

 private:
  PermSpace space_;
};

// Convenience wrapper that builds a solver for rho0's size and solves.
Schedule solve_optimal(const Permutation& rho0, const RequestSequence& sigma,
                       const SolverLimits& limits = {});

}  // namespace listopt
