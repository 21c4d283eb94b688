#include "listopt/sequence.hpp"

#include <utility>

#include "listopt/errors.hpp"

namespace listopt {

RequestSequence::RequestSequence(std::vector<int> requests, int universe_size)
    : requests_(std::move(requests)), universe_size_(universe_size) {
  if (universe_size_ < 0) throw DomainError("negative universe size");
  for (size_t i = 0; i < requests_.size(); ++i) {
    if (requests_[i] < 0 || requests_[i] >= universe_size_) {
      throw DomainError("request " + std::to_string(i + 1) + " names item index " +
                        std::to_string(requests_[i]) + " outside [0.." +
                        std::to_string(universe_size_ - 1) + "]");
    }
  }
}

int RequestSequence::at(int i) const {
  if (i < 1 || i > length()) {
    throw DomainError("request position " + std::to_string(i) + " outside [1.." +
                      std::to_string(length()) + "]");
  }
  return requests_[static_cast<size_t>(i - 1)];
}

std::optional<int> first_occurrence(const RequestSequence& sigma, int item) {
  if (item < 0 || item >= sigma.universe_size()) {
    throw DomainError("unknown item index " + std::to_string(item));
  }
  for (int i = 1; i <= sigma.length(); ++i) {
    if (sigma.at(i) == item) return i;
  }
  return std::nullopt;
}

int next_occurrence(const RequestSequence& sigma, int i, int item) {
  if (item < 0 || item >= sigma.universe_size()) {
    throw DomainError("unknown item index " + std::to_string(item));
  }
  if (i < 1 || i > sigma.length()) {
    throw DomainError("request position " + std::to_string(i) + " outside [1.." +
                      std::to_string(sigma.length()) + "]");
  }
  for (int j = i + 1; j <= sigma.length(); ++j) {
    if (sigma.at(j) == item) return j;
  }
  return sigma.length() + 1;  // sentinel: no later request
}

}  // namespace listopt
