#pragma once

// Reference implementations used only by tests. Each one deliberately takes
// a different route from the production code (pairwise counting instead of
// inversion mapping, explicit state maps instead of rank tables, recursion
// instead of layered DP) so that agreement between the two is evidence, not
// an echo.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <vector>

#include "listopt/permutation.hpp"
#include "listopt/sequence.hpp"

namespace naive {

// Discordant unordered pairs by direct comparison of relative order.
inline std::int64_t pairwise_kendall(const listopt::Permutation& a,
                                     const listopt::Permutation& b) {
  std::int64_t count = 0;
  for (int x = 0; x < a.size(); ++x) {
    for (int y = x + 1; y < a.size(); ++y) {
      const bool before_a = a.position_of(x) < a.position_of(y);
      const bool before_b = b.position_of(x) < b.position_of(y);
      if (before_a != before_b) ++count;
    }
  }
  return count;
}

inline std::int64_t pairwise_kendall_vec(const std::vector<int>& a, const std::vector<int>& b) {
  return pairwise_kendall(listopt::Permutation(a), listopt::Permutation(b));
}

// Minimal adjacent-swap count by breadth-first search over orderings.
inline std::int64_t bfs_swap_distance(const listopt::Permutation& a,
                                      const listopt::Permutation& b) {
  const std::vector<int> goal = b.order();
  std::map<std::vector<int>, std::int64_t> dist;
  std::deque<std::vector<int>> queue;
  dist[a.order()] = 0;
  queue.push_back(a.order());
  while (!queue.empty()) {
    const std::vector<int> cur = queue.front();
    queue.pop_front();
    const std::int64_t d = dist[cur];
    if (cur == goal) return d;
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      std::vector<int> next = cur;
      std::swap(next[i], next[i + 1]);
      if (dist.emplace(next, d + 1).second) queue.push_back(next);
    }
  }
  return -1;
}

// Lexicographic rank by explicit enumeration.
inline std::int64_t enumerated_rank(const listopt::Permutation& rho) {
  std::vector<int> order(static_cast<size_t>(rho.size()));
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::int64_t rank = 0;
  do {
    if (order == rho.order()) return rank;
    ++rank;
  } while (std::next_permutation(order.begin(), order.end()));
  return -1;
}

inline std::vector<std::vector<int>> all_orders(int l) {
  std::vector<int> order(static_cast<size_t>(l));
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

inline int pos_in(const std::vector<int>& order, int item) {
  for (size_t i = 0; i < order.size(); ++i) {
    if (order[i] == item) return static_cast<int>(i) + 1;
  }
  return -1;
}

inline std::vector<int> with_item_at(const std::vector<int>& order, int item, int target) {
  std::vector<int> out = order;
  out.erase(out.begin() + (pos_in(order, item) - 1));
  out.insert(out.begin() + (target - 1), item);
  return out;
}

// Cheapest cost over every initial ordering and every per-request pair of
// positions (move the requested item somewhere, access it there, move it
// again), replaying list states directly. Exponential; tiny instances only.
inline std::int64_t exhaustive_schedule_opt(const listopt::Permutation& rho0,
                                            const listopt::RequestSequence& sigma) {
  const int l = rho0.size();
  const int m = sigma.length();

  struct Rec {
    const listopt::RequestSequence& sigma;
    int l;
    std::int64_t run(const std::vector<int>& order, int i) {
      if (i > sigma.length()) return 0;
      const int item = sigma.at(i);
      const int p = pos_in(order, item);
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (int t = 1; t <= l; ++t) {
        for (int k = 1; k <= l; ++k) {
          const std::int64_t tail = run(with_item_at(order, item, k), i + 1);
          best = std::min(best, std::abs(static_cast<std::int64_t>(p - t)) + t +
                                    std::abs(static_cast<std::int64_t>(t - k)) + tail);
        }
      }
      return best;
    }
  } rec{sigma, l};

  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& initial : all_orders(l)) {
    const std::int64_t head = pairwise_kendall_vec(rho0.order(), initial);
    best = std::min(best, head + (m == 0 ? 0 : rec.run(initial, 1)));
  }
  return best;
}

// Optimum when any reorganization may precede each access, every
// transposition costing 1. States are explicit order vectors in a map.
inline std::int64_t map_dp_all_transpositions(const listopt::Permutation& rho0,
                                              const listopt::RequestSequence& sigma) {
  const auto orders = all_orders(rho0.size());
  std::map<std::vector<int>, std::int64_t> dist;
  dist[rho0.order()] = 0;
  for (int i = 1; i <= sigma.length(); ++i) {
    const int item = sigma.at(i);
    std::map<std::vector<int>, std::int64_t> next;
    for (const auto& target : orders) {
      std::int64_t best = std::numeric_limits<std::int64_t>::max();
      for (const auto& [state, d] : dist) {
        best = std::min(best, d + pairwise_kendall_vec(state, target));
      }
      next[target] = best + pos_in(target, item);
    }
    dist = std::move(next);
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& [state, d] : dist) best = std::min(best, d);
  return best;
}

// Optimum under the classic accounting: paid jump, access, then an optional
// free forward move of the accessed item.
inline std::int64_t map_dp_paid_free(const listopt::Permutation& rho0,
                                     const listopt::RequestSequence& sigma) {
  const auto orders = all_orders(rho0.size());
  std::map<std::vector<int>, std::int64_t> dist;
  dist[rho0.order()] = 0;
  for (int i = 1; i <= sigma.length(); ++i) {
    const int item = sigma.at(i);
    std::map<std::vector<int>, std::int64_t> next;
    for (const auto& [state, d] : dist) {
      for (const auto& mid : orders) {
        const std::int64_t paid = pairwise_kendall_vec(state, mid);
        const int p = pos_in(mid, item);
        for (int f = 1; f <= p; ++f) {
          const std::vector<int> after = with_item_at(mid, item, f);
          const std::int64_t candidate = d + paid + p;
          const auto it = next.find(after);
          if (it == next.end() || candidate < it->second) next[after] = candidate;
        }
      }
    }
    dist = std::move(next);
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& [state, d] : dist) best = std::min(best, d);
  return sigma.length() == 0 ? 0 : best;
}

// Optimum over per-request subset transfers, costs taken from the pairwise
// distance of the before/after orders rather than any closed form.
inline std::int64_t map_dp_subset_transfers(const listopt::Permutation& rho0,
                                            const listopt::RequestSequence& sigma) {
  std::map<std::vector<int>, std::int64_t> dist;
  dist[rho0.order()] = 0;
  for (int i = 1; i <= sigma.length(); ++i) {
    const int item = sigma.at(i);
    std::map<std::vector<int>, std::int64_t> next;
    for (const auto& [state, d] : dist) {
      const int k = pos_in(state, item);
      for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
        std::vector<int> kept, chosen;
        for (int q = 0; q < k - 1; ++q) {
          if (mask & (1u << q)) {
            chosen.push_back(state[static_cast<size_t>(q)]);
          } else {
            kept.push_back(state[static_cast<size_t>(q)]);
          }
        }
        std::vector<int> after = kept;
        after.push_back(item);
        after.insert(after.end(), chosen.begin(), chosen.end());
        after.insert(after.end(), state.begin() + k, state.end());
        const std::int64_t candidate =
            d + pairwise_kendall_vec(state, after) + pos_in(after, item);
        const auto it = next.find(after);
        if (it == next.end() || candidate < it->second) next[after] = candidate;
      }
    }
    dist = std::move(next);
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& [state, d] : dist) best = std::min(best, d);
  return sigma.length() == 0 ? 0 : best;
}

}  // namespace naive
