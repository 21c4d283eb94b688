#pragma once

#include <optional>
#include <vector>

namespace listopt {

// The request sequence sigma over item indices of a fixed universe.
class RequestSequence {
 public:
  RequestSequence() = default;
  RequestSequence(std::vector<int> requests, int universe_size);

  int length() const { return static_cast<int>(requests_.size()); }
  int universe_size() const { return universe_size_; }

  // 1-based request access: at(i) = sigma_i.
  int at(int i) const;
  const std::vector<int>& requests() const { return requests_; }

 private:
  std::vector<int> requests_;
  int universe_size_ = 0;
};

// Smallest i with sigma_i = item, or nullopt when never requested.
std::optional<int> first_occurrence(const RequestSequence& sigma, int item);

// Smallest j > i with sigma_j = item, or the sentinel m+1 when no later
// request exists. i must be in [1..m].
int next_occurrence(const RequestSequence& sigma, int i, int item);

}  // namespace listopt
