#pragma once

#include <cstdint>
#include <vector>

#include "listopt/permutation.hpp"
#include "listopt/sequence.hpp"

namespace listopt {

struct OracleLimits {
  int max_list_size = 5;           // 120 states keeps oracle runs interactive
  std::int64_t max_requests = 5000;
};

// A request-level step of an oracle witness: the ordering the request was
// accessed in, and the ordering handed to the next request (these differ
// only for the paid/free oracle, whose free forward move happens after
// the access).
struct OracleStep {
  Permutation accessed_in;
  Permutation after;
};

struct OracleResult {
  std::int64_t total = 0;
  std::vector<OracleStep> trace;  // filled only when requested
};

// Exact optimum when any reorganization is allowed before each access and
// every transposition (free or paid) costs 1. A burst of transpositions
// between accesses collapses into one jump to a target ordering at
// Kendall tau cost, so the DP is
//   dist_i[r'] = min_r dist_{i-1}[r] + kendall(r, r') + pos(r', sigma_i)
// with dist_0 concentrated at rho0.
OracleResult brute_force_opt_all_transpositions(const Permutation& rho0,
                                                const RequestSequence& sigma,
                                                const OracleLimits& limits = {},
                                                bool with_witness = false);

// Exact optimum under the classic accounting: paid transpositions cost 1,
// and after the access the requested item may move forward for free.
OracleResult brute_force_opt_paid_free(const Permutation& rho0, const RequestSequence& sigma,
                                       const OracleLimits& limits = {},
                                       bool with_witness = false);

// Exact optimum over services where each request applies one subset
// transfer with respect to the requested item and accesses it at its
// post-transfer position.
OracleResult subset_transfer_opt(const Permutation& rho0, const RequestSequence& sigma,
                                 const OracleLimits& limits = {}, bool with_witness = false);

// Recomputes the total of a witness trace: per request, the Kendall tau
// jump from the previous configuration plus the access position. Throws
// DomainError if the trace shape does not match sigma or an `after`
// configuration is not a free forward move of its access configuration.
std::int64_t replay_oracle_trace(const Permutation& rho0, const RequestSequence& sigma,
                                 const std::vector<OracleStep>& trace);

}  // namespace listopt
