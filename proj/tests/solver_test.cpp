#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "listopt/errors.hpp"
#include "listopt/online.hpp"
#include "listopt/schedule.hpp"
#include "listopt/solver.hpp"
#include "support/naive.hpp"

using namespace listopt;

namespace {

Permutation random_perm(std::mt19937_64& rng, int l) {
  return unrank(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(factorial(l))), l);
}

RequestSequence random_sequence(std::mt19937_64& rng, int l, int m) {
  std::vector<int> requests(static_cast<size_t>(m));
  for (auto& r : requests) r = static_cast<int>(rng() % static_cast<std::uint64_t>(l));
  return RequestSequence(std::move(requests), l);
}

}  // namespace

TEST_CASE("initial layer folds the first transfer into the starting distance") {
  const ActionNetworkSolver solver(2);
  const Permutation ab = Permutation::identity(2);

  // request b: node [a,b] costs 0+2, node [b,a] costs 1+1
  const Layer layer = solver.initial_layer(ab, 1);
  REQUIRE(layer.dist.size() == 2);
  CHECK(layer.dist[0] == 2);
  CHECK(layer.dist[1] == 2);

  // the rho0 node always costs exactly the first request's position there
  std::mt19937_64 rng(21);
  const ActionNetworkSolver solver4(4);
  for (int round = 0; round < 20; ++round) {
    const Permutation rho0 = random_perm(rng, 4);
    const int request = static_cast<int>(rng() % 4);
    const Layer l4 = solver4.initial_layer(rho0, request);
    CHECK(l4.dist[static_cast<size_t>(rank_of(rho0))] == rho0.position_of(request));
  }

  const ActionNetworkSolver solver1(1);
  const Layer single = solver1.initial_layer(Permutation::identity(1), 0);
  REQUIRE(single.dist.size() == 1);
  CHECK(single.dist[0] == 1);
}

TEST_CASE("relaxation takes the cheapest incoming transfer arc") {
  const ActionNetworkSolver solver(2);
  const Layer prev = solver.initial_layer(Permutation::identity(2), 1);

  const Layer next = solver.relax(prev, 1);
  CHECK(next.dist[1] == 3);  // [b,a]: min(2+0+1, 2+1+1)
  CHECK(next.dist[0] == 4);  // [a,b]: min(2+0+2, 2+1+2)
  CHECK(next.choice[0] == 0);
  CHECK(next.choice[1] == 1);

  const Layer other = solver.relax(prev, 0);
  CHECK(other.dist[0] == 3);  // [a,b]: a already at 1
  CHECK(other.dist[1] == 4);  // [b,a]: min(2+0+2, 2+1+2)

  // parking arcs drop the access term
  const Layer park = solver.relax_park(prev, 1);
  CHECK(park.dist[0] == 2);
  CHECK(park.dist[1] == 2);
  CHECK(park.choice[0] == 0);
  CHECK(park.choice[1] == 1);

  std::mt19937_64 rng(22);
  const ActionNetworkSolver solver4(4);
  for (int round = 0; round < 10; ++round) {
    const Permutation rho0 = random_perm(rng, 4);
    const int first_req = static_cast<int>(rng() % 4);
    const int next_req = static_cast<int>(rng() % 4);
    const Layer first = solver4.initial_layer(rho0, first_req);

    // every access arc charges at least the access itself
    const Layer accessed = solver4.relax(first, next_req);
    for (size_t r = 0; r < accessed.dist.size(); ++r) {
      CHECK(accessed.dist[r] >= 1);
    }

    // staying put is a zero-cost parking arc, so parking is pointwise free
    // and never changes the layer minimum
    const Layer parked = solver4.relax_park(first, first_req);
    std::int64_t first_min = first.dist[0];
    std::int64_t parked_min = parked.dist[0];
    for (size_t r = 0; r < first.dist.size(); ++r) {
      CHECK(parked.dist[r] <= first.dist[r]);
      first_min = std::min(first_min, first.dist[r]);
      parked_min = std::min(parked_min, parked.dist[r]);
    }
    CHECK(parked_min == first_min);

    // hence relaxing through the parked layer never loses to skipping it
    const Layer through = solver4.relax(parked, next_req);
    for (size_t r = 0; r < through.dist.size(); ++r) {
      CHECK(through.dist[r] <= accessed.dist[r]);
    }
  }
}

TEST_CASE("solve handles the degenerate instances") {
  const Permutation abc = Permutation::identity(3);
  const Schedule empty = solve_optimal(abc, RequestSequence({}, 3));
  CHECK(empty.total == 0);
  CHECK(empty.initial == abc);
  CHECK(empty.access_at.empty());
  CHECK(empty.park_at.empty());

  const Permutation single = Permutation::identity(1);
  const Schedule ones = solve_optimal(single, RequestSequence({0, 0, 0, 0}, 1));
  CHECK(ones.total == 4);

  CHECK_THROWS_AS(solve_optimal(Permutation({}), RequestSequence({}, 0)), DomainError);
}

TEST_CASE("solve finds the known optima") {
  const Permutation ab = Permutation::identity(2);
  const Schedule bb = solve_optimal(ab, RequestSequence({1, 1}, 2));
  CHECK(bb.total == 3);
  CHECK(naive::exhaustive_schedule_opt(ab, RequestSequence({1, 1}, 2)) == 3);

  const Permutation abc = Permutation::identity(3);
  const Schedule ccc = solve_optimal(abc, RequestSequence({2, 2, 2}, 3));
  CHECK(ccc.total == 5);
  CHECK(naive::exhaustive_schedule_opt(abc, RequestSequence({2, 2, 2}, 3)) == 5);
}

TEST_CASE("solve matches the exhaustive schedule enumeration") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 60; ++round) {
    const int l = 2 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 4);
    const Permutation rho0 = random_perm(rng, l);
    const RequestSequence sigma = random_sequence(rng, l, m);
    CHECK(solve_optimal(rho0, sigma).total == naive::exhaustive_schedule_opt(rho0, sigma));
  }
}

TEST_CASE("solve reconstruction replays to its own total") {
  std::mt19937_64 rng(24);
  for (int round = 0; round < 40; ++round) {
    const int l = 2 + static_cast<int>(rng() % 4);
    const int m = static_cast<int>(rng() % 7);
    const Permutation rho0 = random_perm(rng, l);
    const RequestSequence sigma = random_sequence(rng, l, m);
    const Schedule schedule = solve_optimal(rho0, sigma);
    REQUIRE(static_cast<int>(schedule.access_at.size()) == m);
    REQUIRE(static_cast<int>(schedule.park_at.size()) == m);
    const ScheduleCost replay = schedule_cost(rho0, sigma, schedule);
    CHECK(replay.total == schedule.total);
    CHECK(schedule_pre_positions(sigma, schedule).size() == static_cast<size_t>(m));
  }
}

TEST_CASE("solve is bounded by m below and any explicit schedule above") {
  std::mt19937_64 rng(25);
  for (int round = 0; round < 40; ++round) {
    const int l = 2 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 6);
    const Permutation rho0 = random_perm(rng, l);
    const RequestSequence sigma = random_sequence(rng, l, m);
    const std::int64_t opt = solve_optimal(rho0, sigma).total;

    CHECK(opt >= m);

    // fronting every accessed item is one explicit (paid) schedule
    const std::vector<int> ones(static_cast<size_t>(m), 1);
    const Schedule fronting{rho0, ones, ones, {}, 0};
    CHECK(opt <= schedule_cost(rho0, sigma, fronting).total);
    CHECK(opt <= simulate(OnlinePolicy::MoveToFront, rho0, sigma).total);
  }
}

TEST_CASE("appending a request never lowers the optimum") {
  std::mt19937_64 rng(26);
  for (int round = 0; round < 25; ++round) {
    const int l = 2 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 5);
    const Permutation rho0 = random_perm(rng, l);
    const RequestSequence sigma = random_sequence(rng, l, m);

    std::int64_t prev = 0;
    for (int i = 1; i <= m; ++i) {
      std::vector<int> prefix(sigma.requests().begin(), sigma.requests().begin() + i);
      const std::int64_t total = solve_optimal(rho0, RequestSequence(prefix, l)).total;
      CHECK(total >= prev);
      prev = total;
    }
  }
}

TEST_CASE("solve is deterministic") {
  std::mt19937_64 rng(27);
  const ActionNetworkSolver solver(4);
  for (int round = 0; round < 20; ++round) {
    const Permutation rho0 = random_perm(rng, 4);
    const RequestSequence sigma = random_sequence(rng, 4, 6);
    const Schedule a = solver.solve(rho0, sigma);
    const Schedule b = solver.solve(rho0, sigma);
    CHECK(a.initial == b.initial);
    CHECK(a.access_at == b.access_at);
    CHECK(a.park_at == b.park_at);
    CHECK(a.total == b.total);
  }
}

TEST_CASE("solver sizes are guarded") {
  CHECK_THROWS_AS(ActionNetworkSolver(9), ConfigError);
  CHECK_THROWS_AS(solve_optimal(Permutation::identity(9), RequestSequence({}, 9)), ConfigError);
  SolverLimits lifted;
  lifted.max_list_size = 9;
  CHECK(solve_optimal(Permutation::identity(9), RequestSequence({0}, 9), lifted).total == 1);
}
