#include "listopt/online.hpp"

#include <algorithm>

#include "listopt/errors.hpp"

namespace listopt {

std::string policy_name(OnlinePolicy policy) {
  switch (policy) {
    case OnlinePolicy::MoveToFront: return "mtf";
    case OnlinePolicy::Transpose: return "transpose";
    case OnlinePolicy::FrequencyCount: return "frequency-count";
  }
  throw DomainError("unknown policy");
}

OnlinePolicy parse_policy(std::string_view name) {
  if (name == "mtf" || name == "move-to-front") return OnlinePolicy::MoveToFront;
  if (name == "transpose") return OnlinePolicy::Transpose;
  if (name == "frequency-count" || name == "fc") return OnlinePolicy::FrequencyCount;
  throw DomainError("unknown policy '" + std::string(name) + "'");
}

OnlineResult simulate(OnlinePolicy policy, const Permutation& rho0,
                      const RequestSequence& sigma) {
  if (rho0.size() != sigma.universe_size()) {
    throw DomainError("list and request sequence disagree on the item universe");
  }
  const int l = rho0.size();
  std::vector<int> order = rho0.order();
  std::vector<std::int64_t> counts(static_cast<size_t>(l), 0);

  OnlineResult out;
  out.per_request.reserve(static_cast<size_t>(sigma.length()));
  for (int i = 1; i <= sigma.length(); ++i) {
    const int item = sigma.at(i);
    const auto it = std::find(order.begin(), order.end(), item);
    const int p = static_cast<int>(it - order.begin()) + 1;
    out.per_request.push_back(p);
    out.total += p;

    switch (policy) {
      case OnlinePolicy::MoveToFront:
        order.erase(it);
        order.insert(order.begin(), item);
        break;
      case OnlinePolicy::Transpose:
        if (p > 1) std::swap(order[static_cast<size_t>(p - 1)], order[static_cast<size_t>(p - 2)]);
        break;
      case OnlinePolicy::FrequencyCount: {
        ++counts[static_cast<size_t>(item)];
        // slide forward past strictly smaller counts; equal counts keep
        // their current relative order
        int t = p;
        while (t > 1 &&
               counts[static_cast<size_t>(order[static_cast<size_t>(t - 2)])] <
                   counts[static_cast<size_t>(item)]) {
          --t;
        }
        order.erase(order.begin() + (p - 1));
        order.insert(order.begin() + (t - 1), item);
        break;
      }
    }
  }
  return out;
}

}  // namespace listopt
