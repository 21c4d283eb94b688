#include "listopt/schedule.hpp"

#include <cstdlib>

#include "listopt/errors.hpp"
#include "listopt/transfers.hpp"

namespace listopt {

namespace {

void check_shape(const RequestSequence& sigma, const Schedule& s) {
  if (static_cast<int>(s.access_at.size()) != sigma.length() ||
      s.park_at.size() != s.access_at.size()) {
    throw DomainError("schedule has " + std::to_string(s.access_at.size()) + " access and " +
                      std::to_string(s.park_at.size()) + " park positions for " +
                      std::to_string(sigma.length()) + " requests");
  }
}

}  // namespace

ScheduleCost schedule_cost(const Permutation& rho0, const RequestSequence& sigma,
                           const Schedule& s) {
  check_shape(sigma, s);
  if (rho0.size() != s.initial.size() || rho0.size() != sigma.universe_size()) {
    throw DomainError("schedule, list and request sequence disagree on the item universe");
  }
  ScheduleCost out;
  out.total = kendall_tau(rho0, s.initial);
  out.per_request.reserve(s.access_at.size());
  Permutation current = s.initial;
  for (int i = 1; i <= sigma.length(); ++i) {
    const int item = sigma.at(i);
    const int access = s.access_at[static_cast<size_t>(i - 1)];
    const int park = s.park_at[static_cast<size_t>(i - 1)];
    const int before = current.position_of(item);
    current = apply_element_transfer(current, ElementTransfer{item, access}).result;
    current = apply_element_transfer(current, ElementTransfer{item, park}).result;
    CostBreakdown step{std::abs(before - access) + std::abs(access - park), access};
    out.total += step.total();
    out.per_request.push_back(step);
  }
  return out;
}

std::vector<int> schedule_pre_positions(const RequestSequence& sigma, const Schedule& s) {
  check_shape(sigma, s);
  std::vector<int> pre;
  pre.reserve(s.access_at.size());
  Permutation current = s.initial;
  for (int i = 1; i <= sigma.length(); ++i) {
    const int item = sigma.at(i);
    pre.push_back(current.position_of(item));
    current = apply_element_transfer(current, ElementTransfer{item, s.access_at[static_cast<size_t>(i - 1)]}).result;
    current = apply_element_transfer(current, ElementTransfer{item, s.park_at[static_cast<size_t>(i - 1)]}).result;
  }
  return pre;
}

}  // namespace listopt
