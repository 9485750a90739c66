#include "votestream/winner.hpp"

#include <algorithm>
#include <cmath>

#include "votestream/assignment.hpp"

namespace votestream {

namespace {

// C(m, k) with saturation at `cap + 1` to keep the overflow check cheap.
std::uint64_t binomial_capped(int m, int k, std::uint64_t cap) {
    if (k > m) return 0;
    k = std::min(k, m - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        // result * (m - k + i) / i is always integral at this point.
        if (result > (cap + 1) / static_cast<std::uint64_t>(m)) return cap + 1;
        result = result * static_cast<std::uint64_t>(m - k + i) /
                 static_cast<std::uint64_t>(i);
        if (result > cap) return cap + 1;
    }
    return result;
}

// Advances `members` to the next k-combination of 0..m-1 in lexicographic
// order; false when exhausted.
bool next_combination(std::vector<int>& members, int m) {
    const int k = static_cast<int>(members.size());
    int i = k - 1;
    while (i >= 0 && members[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) return false;
    ++members[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
        members[static_cast<std::size_t>(j)] =
            members[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

void check_rule_matches(const Election& election, const RuleSpec& rule) {
    if (rule.ballot() != election.ballot())
        throw ParameterError("rule " + rule.name() +
                             " does not match the election's ballot type");
    if (!rule.is_approval() && rule.positional_m() != election.m())
        throw ParameterError("rule's score vector length differs from m");
}

}  // namespace

Score committee_score(const Election& election, const RuleSpec& rule,
                      const Committee& committee) {
    check_rule_matches(election, rule);
    if (rule.family() == RuleFamily::chamberlin_courant)
        return cc_assign(election, rule, committee).total_satisfaction;
    return monroe_assign(election, rule, committee).total_satisfaction;
}

WinnerResult exact_winner(const Election& election, const RuleSpec& rule,
                          int k, std::uint64_t committee_cap,
                          bool keep_score_table) {
    check_rule_matches(election, rule);
    const int m = election.m();
    if (k < 1 || k > m)
        throw ParameterError("need 1 <= k <= m, got k=" + std::to_string(k) +
                             ", m=" + std::to_string(m));
    if (binomial_capped(m, k, committee_cap) > committee_cap)
        throw ScaleError("C(m, k) exceeds the enumeration cap of " +
                         std::to_string(committee_cap));

    WinnerResult result;
    if (keep_score_table) result.score_table.emplace();

    std::vector<int> members(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) members[static_cast<std::size_t>(i)] = i;
    bool first = true;
    do {
        Committee committee = Committee::of(members, m);
        Score score = committee_score(election, rule, committee);
        if (keep_score_table) result.score_table->emplace_back(committee, score);
        if (first || score > result.opt_score) {
            result.opt_score = score;
            result.winners.clear();
            first = false;
        }
        if (score == result.opt_score) result.winners.push_back(committee);
    } while (next_combination(members, m));
    return result;
}

GapReport make_gap_report(Score opt_score, Score returned_score,
                          double epsilon, std::int64_t n, Score delta) {
    GapReport report;
    report.opt_score = opt_score;
    report.returned_score = returned_score;
    report.gap = opt_score - returned_score;
    report.threshold =
        epsilon * static_cast<double>(n) * static_cast<double>(delta);
    report.within = static_cast<double>(report.gap) <= report.threshold;
    return report;
}

GapReport epsilon_gap_check(const Election& election, const RuleSpec& rule,
                            int k, const Committee& returned, double epsilon) {
    if (epsilon <= 0.0 || epsilon > 1.0)
        throw ParameterError("epsilon must be in (0, 1]");
    WinnerResult exact = exact_winner(election, rule, k);
    Score returned_score = committee_score(election, rule, returned);
    return make_gap_report(exact.opt_score, returned_score, epsilon,
                           election.n(), rule.max_satisfaction());
}

bool exact_epsilon_winning_oracle(const Election& election,
                                  const RuleSpec& rule, int k,
                                  const Committee& returned, double epsilon) {
    check_rule_matches(election, rule);
    if (election.ballot() != BallotType::approval)
        throw ScaleError("exact oracle supports approval ballots only");
    const auto n = election.n();
    const int m = election.m();
    const auto budget =
        static_cast<std::int64_t>(std::floor(epsilon * static_cast<double>(n)));
    if (n > 6 || m > 4 || budget > 2)
        throw ScaleError("exact oracle bounded to n <= 6, m <= 4, budget <= 2");

    auto is_winning = [&](const Election& e) {
        WinnerResult r = exact_winner(e, rule, k);
        return std::find(r.winners.begin(), r.winners.end(), returned) !=
               r.winners.end();
    };
    if (is_winning(election)) return true;

    // All replacement ballots: every subset of candidates.
    std::vector<Vote> ballots;
    for (int mask = 0; mask < (1 << m); ++mask) {
        std::vector<int> approved;
        for (int c = 0; c < m; ++c)
            if (mask & (1 << c)) approved.push_back(c);
        ballots.push_back(Vote::approval(std::move(approved), m));
    }

    std::vector<Vote> modified = election.votes();
    // Change exactly one voter, then exactly two (budget permitting).
    for (std::int64_t i = 0; budget >= 1 && i < n; ++i) {
        const Vote original_i = modified[static_cast<std::size_t>(i)];
        for (const Vote& bi : ballots) {
            modified[static_cast<std::size_t>(i)] = bi;
            if (is_winning(Election(m, BallotType::approval, modified)))
                return true;
            for (std::int64_t j = i + 1; budget >= 2 && j < n; ++j) {
                const Vote original_j = modified[static_cast<std::size_t>(j)];
                for (const Vote& bj : ballots) {
                    modified[static_cast<std::size_t>(j)] = bj;
                    if (is_winning(Election(m, BallotType::approval, modified)))
                        return true;
                }
                modified[static_cast<std::size_t>(j)] = original_j;
            }
        }
        modified[static_cast<std::size_t>(i)] = original_i;
    }
    return false;
}

}  // namespace votestream
