#include "listopt/perm_space.hpp"

#include <algorithm>
#include <numeric>

#include "listopt/errors.hpp"

namespace listopt {

namespace {

// Hard limits for l!-sized allocations. The per-pair matrix squares the
// state count, so it stops two sizes earlier.
constexpr int kMaxMaterializedSize = 9;
constexpr int kMaxKendallMatrixSize = 7;

std::int64_t rank_of_order(const int* order, int l) {
  std::int64_t rank = 0;
  std::int64_t block = 1;
  for (int i = 2; i <= l; ++i) block *= i;  // l!
  for (int i = 0; i < l; ++i) {
    block /= (l - i);
    int smaller_after = 0;
    for (int j = i + 1; j < l; ++j) {
      if (order[j] < order[i]) ++smaller_after;
    }
    rank += smaller_after * block;
  }
  return rank;
}

}  // namespace

PermSpace::PermSpace(int size) : PermSpace(size, Options{}) {}

PermSpace::PermSpace(int size, const Options& opts) : size_(size) {
  if (size < 1) throw DomainError("permutation space needs at least one item");
  if (size > kMaxMaterializedSize) {
    throw ConfigError("list size " + std::to_string(size) + " exceeds the materialization cap of " +
                      std::to_string(kMaxMaterializedSize) + " (" + std::to_string(size) +
                      "! orderings would not fit in memory)");
  }
  const std::int64_t n = factorial(size);
  perms_.reserve(static_cast<size_t>(n));
  std::vector<int> order(static_cast<size_t>(size));
  std::iota(order.begin(), order.end(), 0);
  do {
    perms_.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  // std::next_permutation yields lexicographic order, which is exactly
  // Lehmer rank order: perms_[r] has rank r.

  if (opts.element_tables) {
    tables_.resize(static_cast<size_t>(size));
    std::vector<int> moved(static_cast<size_t>(size));
    for (int item = 0; item < size; ++item) {
      ItemTables& t = tables_[static_cast<size_t>(item)];
      t.pos.resize(static_cast<size_t>(n));
      t.next.resize(static_cast<size_t>(n) * static_cast<size_t>(size));
      for (std::int64_t r = 0; r < n; ++r) {
        const auto& src = perms_[static_cast<size_t>(r)].order();
        const int p = perms_[static_cast<size_t>(r)].position_of(item);
        t.pos[static_cast<size_t>(r)] = static_cast<std::uint8_t>(p);
        for (int j = 1; j <= size; ++j) {
          // move `item` from position p to j, everything else keeps order
          int w = 0;
          for (int q = 0; q < size; ++q) {
            if (q == j - 1) {
              moved[static_cast<size_t>(q)] = item;
              continue;
            }
            if (src[static_cast<size_t>(w)] == item) ++w;
            moved[static_cast<size_t>(q)] = src[static_cast<size_t>(w++)];
          }
          t.next[static_cast<size_t>(r) * static_cast<size_t>(size) + static_cast<size_t>(j - 1)] =
              static_cast<std::uint32_t>(rank_of_order(moved.data(), size));
        }
      }
    }
  }

  if (opts.kendall_matrix) {
    if (size > kMaxKendallMatrixSize) {
      throw ConfigError("list size " + std::to_string(size) +
                        " exceeds the pairwise-distance cap of " +
                        std::to_string(kMaxKendallMatrixSize) + " ((" + std::to_string(size) +
                        "!)^2 distances would not fit in memory)");
    }
    kendall_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (std::int64_t ra = 0; ra < n; ++ra) {
      for (std::int64_t rb = ra + 1; rb < n; ++rb) {
        const auto d = static_cast<std::uint8_t>(
            kendall_tau(perms_[static_cast<size_t>(ra)], perms_[static_cast<size_t>(rb)]));
        kendall_[static_cast<size_t>(ra) * static_cast<size_t>(n) + static_cast<size_t>(rb)] = d;
        kendall_[static_cast<size_t>(rb) * static_cast<size_t>(n) + static_cast<size_t>(ra)] = d;
      }
    }
  }
}

const PermSpace::ItemTables& PermSpace::item_tables(int item) const {
  if (item < 0 || item >= size_) throw DomainError("unknown item index " + std::to_string(item));
  if (tables_.empty()) throw ConfigError("permutation space built without element tables");
  return tables_[static_cast<size_t>(item)];
}

std::int64_t PermSpace::kendall(std::int64_t ra, std::int64_t rb) const {
  if (kendall_.empty()) throw ConfigError("permutation space built without the distance matrix");
  return kendall_[static_cast<size_t>(ra) * static_cast<size_t>(count()) + static_cast<size_t>(rb)];
}

}  // namespace listopt
