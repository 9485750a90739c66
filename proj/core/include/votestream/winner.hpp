#pragma once

#include <cstdint>
#include <optional>

#include "votestream/types.hpp"

namespace votestream {

// Outcome of exact winner determination: every committee tied at the optimum,
// in canonical (lexicographic) order, plus optionally the full score table.
struct WinnerResult {
    std::vector<Committee> winners;
    Score opt_score = 0;
    std::optional<std::vector<std::pair<Committee, Score>>> score_table;

    // Deterministic single-committee report: lexicographically smallest.
    const Committee& reported() const { return winners.front(); }
};

// The committee's score under the rule: CC uses the unconstrained optimal
// assignment, Monroe the capacity-balanced one.
Score committee_score(const Election& election, const RuleSpec& rule,
                      const Committee& committee);

// Enumerates all C(m, k) committees and returns the argmax set. The cap
// guards accidental blowup (ScaleError when C(m, k) exceeds it); this is a
// desk-scale oracle by design.
WinnerResult exact_winner(const Election& election, const RuleSpec& rule,
                          int k, std::uint64_t committee_cap = 1'000'000,
                          bool keep_score_table = false);

// Surrogate epsilon-quality check: the returned committee's score is within
// epsilon * n * Delta of the optimum, where Delta is 1 for approval rules and
// alpha_1 for positional ones. This additive gap is the quantity the
// sampling analysis actually bounds; the exact vote-change oracle below
// exists to sanity-check it at tiny scale.
struct GapReport {
    bool within = false;
    Score opt_score = 0;
    Score returned_score = 0;
    Score gap = 0;
    double threshold = 0.0;  // epsilon * n * Delta
};

GapReport epsilon_gap_check(const Election& election, const RuleSpec& rule,
                            int k, const Committee& returned, double epsilon);

// Gap comparison on already-computed scores (used by the experiment harness
// to avoid re-running the enumeration).
GapReport make_gap_report(Score opt_score, Score returned_score,
                          double epsilon, std::int64_t n, Score delta);

// Literal epsilon-winning test by exhaustive search: is there a way to change
// at most floor(epsilon * n) votes (to arbitrary replacement ballots of the
// same type) that puts `returned` among the exact winners? Approval ballots
// only, bounded to n <= 6, m <= 4, floor(epsilon * n) <= 2.
bool exact_epsilon_winning_oracle(const Election& election,
                                  const RuleSpec& rule, int k,
                                  const Committee& returned, double epsilon);

}  // namespace votestream
