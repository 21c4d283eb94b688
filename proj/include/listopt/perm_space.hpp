#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "listopt/permutation.hpp"

namespace listopt {

// Dense rank-indexed view of all l! orderings of a list, plus the
// transition tables the layered solvers index into. Everything is built
// eagerly so a constructed space is safe for concurrent read-only use.
class PermSpace {
 public:
  struct Options {
    bool element_tables = false;  // per-item position + element-transfer rank tables
    bool kendall_matrix = false;  // full l! x l! Kendall tau matrix (small l only)
  };

  explicit PermSpace(int size);
  PermSpace(int size, const Options& opts);

  int size() const { return size_; }
  std::int64_t count() const { return static_cast<std::int64_t>(perms_.size()); }
  const Permutation& at(std::int64_t rank) const { return perms_[static_cast<size_t>(rank)]; }

  struct ItemTables {
    std::vector<std::uint8_t> pos;    // pos[r] = 1-based position of the item in perm r
    std::vector<std::uint32_t> next;  // next[r*l + (j-1)] = rank after moving the item to j
  };
  const ItemTables& item_tables(int item) const;

  // Kendall tau distance between ranks, from the precomputed matrix.
  std::int64_t kendall(std::int64_t ra, std::int64_t rb) const;
  bool has_kendall_matrix() const { return !kendall_.empty(); }

 private:
  int size_;
  std::vector<Permutation> perms_;
  std::vector<ItemTables> tables_;
  std::vector<std::uint8_t> kendall_;  // row-major, distances fit in 8 bits for l <= 9
};

}  // namespace listopt
