// Independent test oracles. These deliberately avoid the library's
// assignment/winner code paths: they recompute the quantities under test
// straight from the ballot data, so agreement is evidence rather than
// tautology.
#pragma once

#include <cstdint>
#include <vector>

#include "votestream/rng.hpp"
#include "votestream/types.hpp"

namespace votestream::testing {

// Max-Cover brute force: best number of voters covered by any k candidates
// (a voter is covered when her approval set meets the chosen set). Bitmask
// enumeration over all C(m, k) subsets, straight off the raw ballots.
inline std::int64_t max_cover_opt(const Election& election, int k) {
    const int m = election.m();
    std::int64_t best = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::int64_t covered = 0;
        for (const Vote& vote : election.votes()) {
            for (int c : vote.approved()) {
                if (mask & (1u << c)) {
                    ++covered;
                    break;
                }
            }
        }
        best = std::max(best, covered);
    }
    return best;
}

// Voters covered by one concrete candidate set, same counting as above.
inline std::int64_t cover_count(const Election& election,
                                const std::vector<int>& members) {
    std::int64_t covered = 0;
    for (const Vote& vote : election.votes()) {
        for (int c : members) {
            if (vote.approves(c)) {
                ++covered;
                break;
            }
        }
    }
    return covered;
}

// Small random elections for property tests.
inline Election random_approval_election(Rng& rng, std::int64_t n, int m) {
    std::vector<Vote> votes;
    for (std::int64_t i = 0; i < n; ++i) {
        std::vector<int> approved;
        for (int c = 0; c < m; ++c)
            if (rng.bernoulli(0.5)) approved.push_back(c);
        votes.push_back(Vote::approval(std::move(approved), m));
    }
    return Election(m, BallotType::approval, std::move(votes));
}

inline Election random_ranking_election(Rng& rng, std::int64_t n, int m) {
    std::vector<Vote> votes;
    std::vector<int> order(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < n; ++i) {
        for (int c = 0; c < m; ++c) order[static_cast<std::size_t>(c)] = c;
        rng.shuffle(order);
        votes.push_back(Vote::ranking(order, m));
    }
    return Election(m, BallotType::ranking, std::move(votes));
}

inline std::vector<int> random_committee_members(Rng& rng, int m, int k) {
    std::vector<int> all(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) all[static_cast<std::size_t>(c)] = c;
    rng.shuffle(all);
    all.resize(static_cast<std::size_t>(k));
    return all;
}

}  // namespace votestream::testing
