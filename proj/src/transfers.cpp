#include "listopt/transfers.hpp"

#include <algorithm>
#include <cstdlib>

#include "listopt/errors.hpp"

namespace listopt {

TransferResult apply_element_transfer(const Permutation& rho, const ElementTransfer& t) {
  const int l = rho.size();
  if (t.target < 1 || t.target > l) {
    throw DomainError("element transfer target " + std::to_string(t.target) + " outside [1.." +
                      std::to_string(l) + "]");
  }
  const int p = rho.position_of(t.item);
  std::vector<int> order = rho.order();
  order.erase(order.begin() + (p - 1));
  order.insert(order.begin() + (t.target - 1), t.item);
  return TransferResult{Permutation(std::move(order)), std::abs(p - t.target)};
}

TransferResult apply_subset_transfer(const Permutation& rho, const SubsetTransfer& t) {
  const int l = rho.size();
  const int k = rho.position_of(t.item);
  std::vector<char> in_subset(static_cast<size_t>(l), 0);
  for (int s : t.subset) {
    const int sp = rho.position_of(s);
    if (sp >= k) {
      throw DomainError("subset member " + std::to_string(s) + " does not precede item " +
                        std::to_string(t.item));
    }
    if (in_subset[static_cast<size_t>(s)]) {
      throw DomainError("subset repeats item " + std::to_string(s));
    }
    in_subset[static_cast<size_t>(s)] = 1;
  }

  // cost = sum over members of (1 + non-subset items strictly between the
  // member and the pivot item); equals the Kendall tau to the result.
  std::int64_t cost = 0;
  for (int p = 1; p < k; ++p) {
    if (!in_subset[static_cast<size_t>(rho.item_at(p))]) continue;
    std::int64_t between = 0;
    for (int q = p + 1; q < k; ++q) {
      if (!in_subset[static_cast<size_t>(rho.item_at(q))]) ++between;
    }
    cost += 1 + between;
  }

  std::vector<int> order;
  order.reserve(static_cast<size_t>(l));
  for (int p = 1; p < k; ++p) {
    const int a = rho.item_at(p);
    if (!in_subset[static_cast<size_t>(a)]) order.push_back(a);
  }
  order.push_back(t.item);
  for (int p = 1; p < k; ++p) {
    const int a = rho.item_at(p);
    if (in_subset[static_cast<size_t>(a)]) order.push_back(a);
  }
  for (int p = k + 1; p <= l; ++p) order.push_back(rho.item_at(p));
  return TransferResult{Permutation(std::move(order)), cost};
}

std::vector<TransferResult> enumerate_element_transfers(const Permutation& rho, int item) {
  rho.position_of(item);  // validate
  std::vector<TransferResult> out;
  out.reserve(static_cast<size_t>(rho.size()));
  for (int j = 1; j <= rho.size(); ++j) {
    out.push_back(apply_element_transfer(rho, ElementTransfer{item, j}));
  }
  return out;
}

std::vector<SubsetTransferEntry> enumerate_subset_transfers(const Permutation& rho, int item) {
  const int k = rho.position_of(item);
  std::vector<SubsetTransferEntry> out;
  out.reserve(static_cast<size_t>(1) << (k - 1));
  for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
    SubsetTransfer t{item, {}};
    for (int b = 0; b < k - 1; ++b) {
      if (mask & (1u << b)) t.subset.push_back(rho.item_at(b + 1));
    }
    auto applied = apply_subset_transfer(rho, t);
    out.push_back(SubsetTransferEntry{std::move(t), std::move(applied.result), applied.cost});
  }
  return out;
}

}  // namespace listopt
