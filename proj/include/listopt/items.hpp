#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace listopt {

// The item universe of one list instance. Labels are distinct, non-empty
// text tokens; each gets a stable index in [0..l-1] in construction order.
class ItemCatalog {
 public:
  explicit ItemCatalog(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int index) const;
  std::optional<int> index_of(std::string_view label) const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

// "a".."z" for l <= 26, "i0","i1",... beyond. Used by generated workloads.
std::vector<std::string> default_labels(int count);

}  // namespace listopt
