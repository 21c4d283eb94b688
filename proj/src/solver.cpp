#include "listopt/solver.hpp"

#include <cassert>
#include <cstdlib>
#include <limits>
#include <utility>

#include "listopt/errors.hpp"

namespace listopt {

namespace {

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max() / 4;

int checked_solver_size(int list_size, const SolverLimits& limits) {
  if (list_size >= 1 && list_size > limits.max_list_size) {
    throw ConfigError("list size " + std::to_string(list_size) +
                      " exceeds the configured bound of " + std::to_string(limits.max_list_size) +
                      " for l!-indexed layers (raise the bound to override)");
  }
  return list_size;  // sizes < 1 are rejected by PermSpace
}

}  // namespace

ActionNetworkSolver::ActionNetworkSolver(int list_size, const SolverLimits& limits)
    : space_(checked_solver_size(list_size, limits),
             PermSpace::Options{.element_tables = true, .kendall_matrix = false}) {}

Layer ActionNetworkSolver::initial_layer(const Permutation& rho0, int first_request) const {
  if (rho0.size() != space_.size()) {
    throw DomainError("initial ordering has " + std::to_string(rho0.size()) + " items, solver has " +
                      std::to_string(space_.size()));
  }
  const std::int64_t n = space_.count();
  const auto& pos = space_.item_tables(first_request).pos;
  Layer layer;
  layer.dist.resize(static_cast<size_t>(n));
  layer.choice.assign(static_cast<size_t>(n), Layer::kInitialChoice);
  for (std::int64_t r = 0; r < n; ++r) {
    layer.dist[static_cast<size_t>(r)] =
        kendall_tau(rho0, space_.at(r)) + pos[static_cast<size_t>(r)];
  }
  return layer;
}

Layer ActionNetworkSolver::relax(const Layer& prev, int request) const {
  const std::int64_t n = space_.count();
  const int l = space_.size();
  const auto& tables = space_.item_tables(request);
  Layer next;
  next.dist.assign(static_cast<size_t>(n), kUnreached);
  next.choice.assign(static_cast<size_t>(n), 0);
  // Sources ascending by rank; keeping the first strict minimum realizes
  // the smallest-predecessor-rank tie-break (each source reaches a given
  // node through exactly one target j, so no finer order is needed).
  for (std::int64_t r = 0; r < n; ++r) {
    const std::int64_t d = prev.dist[static_cast<size_t>(r)];
    const int p = tables.pos[static_cast<size_t>(r)];
    const std::uint32_t* next_rank = &tables.next[static_cast<size_t>(r) * static_cast<size_t>(l)];
    for (int j = 1; j <= l; ++j) {
      const auto target = static_cast<size_t>(next_rank[j - 1]);
      const std::int64_t candidate = d + std::abs(p - j) + j;
      if (candidate < next.dist[target]) {
        next.dist[target] = candidate;
        next.choice[target] = static_cast<std::uint32_t>(r);
      }
    }
  }
  return next;
}

Layer ActionNetworkSolver::relax_park(const Layer& prev, int request) const {
  const std::int64_t n = space_.count();
  const int l = space_.size();
  const auto& tables = space_.item_tables(request);
  Layer next;
  next.dist.assign(static_cast<size_t>(n), kUnreached);
  next.choice.assign(static_cast<size_t>(n), 0);
  for (std::int64_t r = 0; r < n; ++r) {
    const std::int64_t d = prev.dist[static_cast<size_t>(r)];
    const int p = tables.pos[static_cast<size_t>(r)];
    const std::uint32_t* next_rank = &tables.next[static_cast<size_t>(r) * static_cast<size_t>(l)];
    for (int j = 1; j <= l; ++j) {
      const auto target = static_cast<size_t>(next_rank[j - 1]);
      const std::int64_t candidate = d + std::abs(p - j);
      if (candidate < next.dist[target]) {
        next.dist[target] = candidate;
        next.choice[target] = static_cast<std::uint32_t>(r);
      }
    }
  }
  return next;
}

Schedule ActionNetworkSolver::solve(const Permutation& rho0, const RequestSequence& sigma) const {
  if (rho0.size() != space_.size() || sigma.universe_size() != space_.size()) {
    throw DomainError("list and request sequence disagree on the item universe");
  }
  const int m = sigma.length();
  if (m == 0) {
    return Schedule{rho0, {}, {}, {}, 0};
  }

  // park_choices[g] and access_choices[g] record the two half-steps of
  // the gap between access g+1 and access g+2.
  std::vector<std::vector<std::uint32_t>> park_choices;
  std::vector<std::vector<std::uint32_t>> access_choices;
  park_choices.reserve(static_cast<size_t>(m - 1));
  access_choices.reserve(static_cast<size_t>(m - 1));
  Layer layer = initial_layer(rho0, sigma.at(1));
  for (int i = 1; i < m; ++i) {
    Layer parked = relax_park(layer, sigma.at(i));
    park_choices.push_back(std::move(parked.choice));
    Layer next = relax(parked, sigma.at(i + 1));
    access_choices.push_back(std::move(next.choice));
    layer.dist = std::move(next.dist);
  }

  // The arcs into the sink cost nothing, so the optimum is the smallest
  // final-layer distance; ties go to the smallest rank.
  const std::int64_t n = space_.count();
  std::int64_t best_rank = 0;
  for (std::int64_t r = 1; r < n; ++r) {
    if (layer.dist[static_cast<size_t>(r)] < layer.dist[static_cast<size_t>(best_rank)]) {
      best_rank = r;
    }
  }
  const std::int64_t best_total = layer.dist[static_cast<size_t>(best_rank)];

  // Walk the choice logs back to the first layer. access_nodes[i] is the
  // ordering request i+1 is accessed in; parked_nodes[i] the ordering
  // after its park.
  std::vector<std::int64_t> access_nodes(static_cast<size_t>(m));
  std::vector<std::int64_t> parked_nodes(static_cast<size_t>(m > 0 ? m - 1 : 0));
  std::int64_t r = best_rank;
  for (int i = m; i >= 2; --i) {
    access_nodes[static_cast<size_t>(i - 1)] = r;
    const std::int64_t q = access_choices[static_cast<size_t>(i - 2)][static_cast<size_t>(r)];
    parked_nodes[static_cast<size_t>(i - 2)] = q;
    r = park_choices[static_cast<size_t>(i - 2)][static_cast<size_t>(q)];
  }
  access_nodes[0] = r;

  // Request i is accessed at its position in access_nodes[i-1] and left
  // at its position in parked_nodes[i-1]; the last park is the identity.
  Schedule schedule{space_.at(access_nodes[0]), {}, {}, {}, 0};
  schedule.access_at.reserve(static_cast<size_t>(m));
  schedule.park_at.reserve(static_cast<size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const auto& pos = space_.item_tables(sigma.at(i)).pos;
    const int access = pos[static_cast<size_t>(access_nodes[static_cast<size_t>(i - 1)])];
    const int park =
        i < m ? pos[static_cast<size_t>(parked_nodes[static_cast<size_t>(i - 1)])] : access;
    schedule.access_at.push_back(access);
    schedule.park_at.push_back(park);
  }
  ScheduleCost cost = schedule_cost(rho0, sigma, schedule);
  assert(cost.total == best_total);
  (void)best_total;
  schedule.breakdown = std::move(cost.per_request);
  schedule.total = cost.total;
  return schedule;
}

Schedule solve_optimal(const Permutation& rho0, const RequestSequence& sigma,
                       const SolverLimits& limits) {
  if (rho0.size() == 0) throw DomainError("cannot solve over an empty list");
  ActionNetworkSolver solver(rho0.size(), limits);
  return solver.solve(rho0, sigma);
}

}  // namespace listopt
