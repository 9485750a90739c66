#pragma once

#include "votestream/types.hpp"

namespace votestream {

// A voter -> committee-member map together with its total satisfaction.
// Monroe assignments additionally satisfy the capacity band
// floor(n/k) <= |rep^-1(c)| <= ceil(n/k) for every member c.
struct Assignment {
    std::vector<int> rep;  // rep[v] = candidate index representing voter v
    Score total_satisfaction = 0;
};

// Optimal unconstrained assignment: each voter gets the member that maximizes
// her satisfaction, ties broken toward the lowest candidate index. The total
// is the committee's CC score. Requires rule.family == chamberlin_courant.
Assignment cc_assign(const Election& election, const RuleSpec& rule,
                     const Committee& committee);

// Optimal capacity-balanced assignment (Monroe): exactly n mod k members
// serve ceil(n/k) voters and the rest floor(n/k); the total satisfaction is
// the maximum over all such assignments. Solved as a min-cost transportation
// problem (unit voter supplies, capacitated member sinks, edge cost
// maxSat - satisfaction); integer costs make the optimum integral. Requires
// rule.family == monroe. n = 0 yields the empty assignment.
Assignment monroe_assign(const Election& election, const RuleSpec& rule,
                         const Committee& committee);

// Test oracle: exhaustively enumerates balanced assignments and returns a
// maximum-satisfaction one. Bounded to n <= 10, k <= 3 (ScaleError beyond).
Assignment brute_force_monroe_oracle(const Election& election,
                                     const RuleSpec& rule,
                                     const Committee& committee);

}  // namespace votestream
