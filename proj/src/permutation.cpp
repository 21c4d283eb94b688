#include "listopt/permutation.hpp"

#include <numeric>
#include <utility>

#include "listopt/errors.hpp"

namespace listopt {

Permutation::Permutation(std::vector<int> order) : order_(std::move(order)) {
  const int l = size();
  pos_.assign(static_cast<size_t>(l), 0);
  for (int p = 0; p < l; ++p) {
    const int item = order_[static_cast<size_t>(p)];
    if (item < 0 || item >= l) {
      throw DomainError("ordering entry " + std::to_string(item) + " outside [0.." +
                        std::to_string(l - 1) + "]");
    }
    if (pos_[static_cast<size_t>(item)] != 0) {
      throw DomainError("ordering repeats item " + std::to_string(item));
    }
    pos_[static_cast<size_t>(item)] = p + 1;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> order(static_cast<size_t>(size));
  std::iota(order.begin(), order.end(), 0);
  return Permutation(std::move(order));
}

int Permutation::item_at(int pos) const {
  if (pos < 1 || pos > size()) {
    throw DomainError("position " + std::to_string(pos) + " outside [1.." +
                      std::to_string(size()) + "]");
  }
  return order_[static_cast<size_t>(pos - 1)];
}

int Permutation::position_of(int item) const {
  if (item < 0 || item >= size()) {
    throw DomainError("unknown item index " + std::to_string(item));
  }
  return pos_[static_cast<size_t>(item)];
}

std::int64_t kendall_tau(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw DomainError("kendall_tau over mismatched universes (" + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()) + " items)");
  }
  const int l = a.size();
  // Map a's order through b's positions; discordant pairs become inversions.
  std::vector<int> mapped(static_cast<size_t>(l));
  for (int p = 1; p <= l; ++p) {
    mapped[static_cast<size_t>(p - 1)] = b.position_of(a.item_at(p));
  }
  std::int64_t inversions = 0;
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      if (mapped[static_cast<size_t>(i)] > mapped[static_cast<size_t>(j)]) ++inversions;
    }
  }
  return inversions;
}

std::int64_t factorial(int n) {
  if (n < 0 || n > 20) {
    throw DomainError("factorial argument " + std::to_string(n) + " outside [0..20]");
  }
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::int64_t rank_of(const Permutation& p) {
  const int l = p.size();
  std::int64_t rank = 0;
  for (int i = 0; i < l; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < l; ++j) {
      if (p.order()[static_cast<size_t>(j)] < p.order()[static_cast<size_t>(i)]) ++smaller_after;
    }
    rank += smaller_after * factorial(l - 1 - i);
  }
  return rank;
}

Permutation unrank(std::int64_t rank, int size) {
  if (size < 0) throw DomainError("negative permutation size");
  const std::int64_t total = factorial(size);
  if (rank < 0 || rank >= total) {
    throw DomainError("rank " + std::to_string(rank) + " outside [0.." + std::to_string(total - 1) +
                      "] for size " + std::to_string(size));
  }
  std::vector<int> available(static_cast<size_t>(size));
  std::iota(available.begin(), available.end(), 0);
  std::vector<int> order;
  order.reserve(static_cast<size_t>(size));
  for (int i = 0; i < size; ++i) {
    const std::int64_t block = factorial(size - 1 - i);
    const auto digit = static_cast<size_t>(rank / block);
    rank %= block;
    order.push_back(available[digit]);
    available.erase(available.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(order));
}

}  // namespace listopt
