#include "listopt/items.hpp"

#include <utility>

#include "listopt/errors.hpp"

namespace listopt {

ItemCatalog::ItemCatalog(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) {
      throw DomainError("item label at index " + std::to_string(i) + " is empty");
    }
    auto [it, inserted] = index_.emplace(labels_[i], static_cast<int>(i));
    if (!inserted) {
      throw DomainError("duplicate item label '" + labels_[i] + "'");
    }
  }
}

const std::string& ItemCatalog::label(int index) const {
  if (index < 0 || index >= size()) {
    throw DomainError("item index " + std::to_string(index) + " out of range");
  }
  return labels_[static_cast<size_t>(index)];
}

std::optional<int> ItemCatalog::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> default_labels(int count) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(count));
  if (count <= 26) {
    for (int i = 0; i < count; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  } else {
    for (int i = 0; i < count; ++i) labels.push_back("i" + std::to_string(i));
  }
  return labels;
}

}  // namespace listopt
