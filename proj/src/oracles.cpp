#include "listopt/oracles.hpp"

#include <limits>
#include <utility>

#include "listopt/errors.hpp"
#include "listopt/perm_space.hpp"
#include "listopt/transfers.hpp"

namespace listopt {

namespace {

constexpr std::int64_t kUnreached = std::numeric_limits<std::int64_t>::max() / 4;

void check_instance(const Permutation& rho0, const RequestSequence& sigma,
                    const OracleLimits& limits) {
  if (rho0.size() == 0) throw DomainError("cannot run an oracle over an empty list");
  if (sigma.universe_size() != rho0.size()) {
    throw DomainError("list and request sequence disagree on the item universe");
  }
  if (rho0.size() > limits.max_list_size) {
    throw ConfigError("list size " + std::to_string(rho0.size()) +
                      " exceeds the oracle bound of " + std::to_string(limits.max_list_size) +
                      " (raise the bound to override; state count grows as l!)");
  }
  if (sigma.length() > limits.max_requests) {
    throw ConfigError("request sequence length " + std::to_string(sigma.length()) +
                      " exceeds the oracle bound of " + std::to_string(limits.max_requests));
  }
}

// Distance argmin over the final layer; ties to the smallest rank.
std::int64_t argmin_rank(const std::vector<std::int64_t>& dist) {
  std::int64_t best = 0;
  for (std::int64_t r = 1; r < static_cast<std::int64_t>(dist.size()); ++r) {
    if (dist[static_cast<size_t>(r)] < dist[static_cast<size_t>(best)]) best = r;
  }
  return best;
}

}  // namespace

OracleResult brute_force_opt_all_transpositions(const Permutation& rho0,
                                                const RequestSequence& sigma,
                                                const OracleLimits& limits, bool with_witness) {
  check_instance(rho0, sigma, limits);
  PermSpace space(rho0.size(), {.element_tables = false, .kendall_matrix = true});
  const std::int64_t n = space.count();
  const int m = sigma.length();

  std::vector<std::int64_t> dist(static_cast<size_t>(n), kUnreached);
  dist[static_cast<size_t>(rank_of(rho0))] = 0;
  std::vector<std::vector<std::uint32_t>> parents;
  if (with_witness) parents.reserve(static_cast<size_t>(m));

  std::vector<std::int64_t> next(static_cast<size_t>(n));
  for (int i = 1; i <= m; ++i) {
    const int item = sigma.at(i);
    std::vector<std::uint32_t> parent(with_witness ? static_cast<size_t>(n) : 0, 0);
    for (std::int64_t to = 0; to < n; ++to) {
      const std::int64_t access = space.at(to).position_of(item);
      std::int64_t best = kUnreached;
      std::int64_t best_from = 0;
      for (std::int64_t from = 0; from < n; ++from) {
        const std::int64_t d = dist[static_cast<size_t>(from)];
        if (d >= kUnreached) continue;
        const std::int64_t c = d + space.kendall(from, to);
        if (c < best) {
          best = c;
          best_from = from;
        }
      }
      next[static_cast<size_t>(to)] = best >= kUnreached ? kUnreached : best + access;
      if (with_witness) parent[static_cast<size_t>(to)] = static_cast<std::uint32_t>(best_from);
    }
    dist.swap(next);
    if (with_witness) parents.push_back(std::move(parent));
  }

  OracleResult out;
  const std::int64_t final_rank = argmin_rank(dist);
  out.total = m == 0 ? 0 : dist[static_cast<size_t>(final_rank)];
  if (with_witness && m > 0) {
    std::vector<std::int64_t> path(static_cast<size_t>(m));
    std::int64_t r = final_rank;
    for (int i = m; i >= 1; --i) {
      path[static_cast<size_t>(i - 1)] = r;
      r = parents[static_cast<size_t>(i - 1)][static_cast<size_t>(r)];
    }
    for (int i = 1; i <= m; ++i) {
      const Permutation& config = space.at(path[static_cast<size_t>(i - 1)]);
      out.trace.push_back(OracleStep{config, config});
    }
  }
  return out;
}

OracleResult brute_force_opt_paid_free(const Permutation& rho0, const RequestSequence& sigma,
                                       const OracleLimits& limits, bool with_witness) {
  check_instance(rho0, sigma, limits);
  PermSpace space(rho0.size(), {.element_tables = true, .kendall_matrix = true});
  const std::int64_t n = space.count();
  const int l = space.size();
  const int m = sigma.length();

  std::vector<std::int64_t> dist(static_cast<size_t>(n), kUnreached);
  dist[static_cast<size_t>(rank_of(rho0))] = 0;

  // Per request, remember the pre-access configuration and the state it
  // came from so the access/free-move split can be reconstructed.
  std::vector<std::vector<std::uint32_t>> parent_prev, parent_access;
  if (with_witness) {
    parent_prev.reserve(static_cast<size_t>(m));
    parent_access.reserve(static_cast<size_t>(m));
  }

  std::vector<std::int64_t> next(static_cast<size_t>(n));
  for (int i = 1; i <= m; ++i) {
    const int item = sigma.at(i);
    const auto& tables = space.item_tables(item);
    std::fill(next.begin(), next.end(), kUnreached);
    std::vector<std::uint32_t> from_state(with_witness ? static_cast<size_t>(n) : 0, 0);
    std::vector<std::uint32_t> access_state(with_witness ? static_cast<size_t>(n) : 0, 0);
    for (std::int64_t tau = 0; tau < n; ++tau) {
      // paid jump to tau, then access the item where it stands
      std::int64_t best = kUnreached;
      std::int64_t best_from = 0;
      for (std::int64_t from = 0; from < n; ++from) {
        const std::int64_t d = dist[static_cast<size_t>(from)];
        if (d >= kUnreached) continue;
        const std::int64_t c = d + space.kendall(from, tau);
        if (c < best) {
          best = c;
          best_from = from;
        }
      }
      if (best >= kUnreached) continue;
      const int p = tables.pos[static_cast<size_t>(tau)];
      const std::int64_t served = best + p;
      // free forward move of the accessed item, j <= p, including j = p
      for (int j = 1; j <= p; ++j) {
        const auto to = static_cast<size_t>(
            tables.next[static_cast<size_t>(tau) * static_cast<size_t>(l) +
                        static_cast<size_t>(j - 1)]);
        if (served < next[to]) {
          next[to] = served;
          if (with_witness) {
            from_state[to] = static_cast<std::uint32_t>(best_from);
            access_state[to] = static_cast<std::uint32_t>(tau);
          }
        }
      }
    }
    dist.swap(next);
    if (with_witness) {
      parent_prev.push_back(std::move(from_state));
      parent_access.push_back(std::move(access_state));
    }
  }

  OracleResult out;
  const std::int64_t final_rank = argmin_rank(dist);
  out.total = m == 0 ? 0 : dist[static_cast<size_t>(final_rank)];
  if (with_witness && m > 0) {
    std::vector<std::int64_t> after_path(static_cast<size_t>(m));
    std::vector<std::int64_t> access_path(static_cast<size_t>(m));
    std::int64_t r = final_rank;
    for (int i = m; i >= 1; --i) {
      after_path[static_cast<size_t>(i - 1)] = r;
      access_path[static_cast<size_t>(i - 1)] =
          parent_access[static_cast<size_t>(i - 1)][static_cast<size_t>(r)];
      r = parent_prev[static_cast<size_t>(i - 1)][static_cast<size_t>(r)];
    }
    for (int i = 1; i <= m; ++i) {
      out.trace.push_back(OracleStep{space.at(access_path[static_cast<size_t>(i - 1)]),
                                     space.at(after_path[static_cast<size_t>(i - 1)])});
    }
  }
  return out;
}

OracleResult subset_transfer_opt(const Permutation& rho0, const RequestSequence& sigma,
                                 const OracleLimits& limits, bool with_witness) {
  check_instance(rho0, sigma, limits);
  PermSpace space(rho0.size(), {.element_tables = false, .kendall_matrix = false});
  const std::int64_t n = space.count();
  const int m = sigma.length();

  std::vector<std::int64_t> dist(static_cast<size_t>(n), kUnreached);
  dist[static_cast<size_t>(rank_of(rho0))] = 0;
  std::vector<std::vector<std::uint32_t>> parents;
  if (with_witness) parents.reserve(static_cast<size_t>(m));

  std::vector<std::int64_t> next(static_cast<size_t>(n));
  for (int i = 1; i <= m; ++i) {
    const int item = sigma.at(i);
    std::fill(next.begin(), next.end(), kUnreached);
    std::vector<std::uint32_t> parent(with_witness ? static_cast<size_t>(n) : 0, 0);
    for (std::int64_t from = 0; from < n; ++from) {
      const std::int64_t d = dist[static_cast<size_t>(from)];
      if (d >= kUnreached) continue;
      for (const auto& entry : enumerate_subset_transfers(space.at(from), item)) {
        // the item lands at position k - |S| and is accessed there
        const std::int64_t c = d + entry.cost + entry.result.position_of(item);
        const auto to = static_cast<size_t>(rank_of(entry.result));
        if (c < next[to]) {
          next[to] = c;
          if (with_witness) parent[to] = static_cast<std::uint32_t>(from);
        }
      }
    }
    dist.swap(next);
    if (with_witness) parents.push_back(std::move(parent));
  }

  OracleResult out;
  const std::int64_t final_rank = argmin_rank(dist);
  out.total = m == 0 ? 0 : dist[static_cast<size_t>(final_rank)];
  if (with_witness && m > 0) {
    std::vector<std::int64_t> path(static_cast<size_t>(m));
    std::int64_t r = final_rank;
    for (int i = m; i >= 1; --i) {
      path[static_cast<size_t>(i - 1)] = r;
      r = parents[static_cast<size_t>(i - 1)][static_cast<size_t>(r)];
    }
    for (int i = 1; i <= m; ++i) {
      const Permutation& config = space.at(path[static_cast<size_t>(i - 1)]);
      out.trace.push_back(OracleStep{config, config});
    }
  }
  return out;
}

std::int64_t replay_oracle_trace(const Permutation& rho0, const RequestSequence& sigma,
                                 const std::vector<OracleStep>& trace) {
  if (static_cast<int>(trace.size()) != sigma.length()) {
    throw DomainError("witness trace has " + std::to_string(trace.size()) + " steps for " +
                      std::to_string(sigma.length()) + " requests");
  }
  std::int64_t total = 0;
  const Permutation* prev = &rho0;
  for (int i = 1; i <= sigma.length(); ++i) {
    const OracleStep& step = trace[static_cast<size_t>(i - 1)];
    const int item = sigma.at(i);
    const int p = step.accessed_in.position_of(item);
    total += kendall_tau(*prev, step.accessed_in) + p;
    const int j = step.after.position_of(item);
    if (j > p) {
      throw DomainError("witness step " + std::to_string(i) +
                        " moves the accessed item backward for free");
    }
    const auto moved = apply_element_transfer(step.accessed_in, ElementTransfer{item, j});
    if (!(moved.result == step.after)) {
      throw DomainError("witness step " + std::to_string(i) +
                        " is not a forward move of the accessed item");
    }
    prev = &step.after;
  }
  return total;
}

}  // namespace listopt
