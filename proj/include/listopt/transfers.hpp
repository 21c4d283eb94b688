#pragma once

#include <cstdint>
#include <vector>

#include "listopt/permutation.hpp"

namespace listopt {

// Move one item to a 1-based target position; everything else keeps its
// relative order. Costs |current position - target| transpositions.
struct ElementTransfer {
  int item = 0;
  int target = 1;
};

// Move a subset of the items currently preceding `item` to just behind
// it, preserving the subset's internal order.
struct SubsetTransfer {
  int item = 0;
  std::vector<int> subset;  // item indices, each preceding `item`
};

struct TransferResult {
  Permutation result;
  std::int64_t cost = 0;
};

TransferResult apply_element_transfer(const Permutation& rho, const ElementTransfer& t);
TransferResult apply_subset_transfer(const Permutation& rho, const SubsetTransfer& t);

// All l element transfers of `item`, ordered by target position j = 1..l.
std::vector<TransferResult> enumerate_element_transfers(const Permutation& rho, int item);

struct SubsetTransferEntry {
  SubsetTransfer transfer;
  Permutation result;
  std::int64_t cost = 0;
};

// All 2^(k-1) subset transfers of `item` at position k, one per subset of
// its predecessors. Subsets are enumerated by bitmask over predecessor
// positions (bit b = predecessor at position b+1), mask ascending.
std::vector<SubsetTransferEntry> enumerate_subset_transfers(const Permutation& rho, int item);

}  // namespace listopt
