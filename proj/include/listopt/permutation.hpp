#pragma once

#include <cstdint>
#include <vector>

namespace listopt {

// An ordering of the l items of a list. Items are represented by their
// catalog indices in [0..l-1]; positions are 1-based in the public
// contract (the item at position i costs i to access).
//
// order_ and pos_ are mutually inverse: pos_[order_[p-1]] == p.
class Permutation {
 public:
  explicit Permutation(std::vector<int> order);
  static Permutation identity(int size);

  int size() const { return static_cast<int>(order_.size()); }

  // Item index at 1-based position p.
  int item_at(int pos) const;
  // 1-based position of an item index.
  int position_of(int item) const;

  const std::vector<int>& order() const { return order_; }

  bool operator==(const Permutation& other) const { return order_ == other.order_; }

 private:
  std::vector<int> order_;  // order_[p-1] = item at position p
  std::vector<int> pos_;    // pos_[item] = 1-based position
};

// Number of unordered item pairs whose relative order differs between the
// two orderings; equals the minimal count of adjacent transpositions
// transforming one into the other.
std::int64_t kendall_tau(const Permutation& a, const Permutation& b);

// Lexicographic Lehmer-code rank in [0..l!-1] and its inverse.
std::int64_t rank_of(const Permutation& p);
Permutation unrank(std::int64_t rank, int size);

std::int64_t factorial(int n);

}  // namespace listopt
