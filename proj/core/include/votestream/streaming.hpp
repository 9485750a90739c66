#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "votestream/rng.hpp"
#include "votestream/types.hpp"
#include "votestream/winner.hpp"

namespace votestream {

enum class SamplerChoice { reservoir, bernoulli };

// Per-rule sampling parameters. t is the base sample size from the rule's
// formula; draw_size is the total number of voters to retain. All logs are
// natural: that is what the probability algebra behind the formulas needs.
struct SampleParams {
    double epsilon = 0.0;
    int k = 0;
    int m = 0;
    double delta = 0.5;  // Bernoulli overshoot parameter
    std::int64_t t = 0;
    std::int64_t draw_size = 0;
};

// Draw sizes per rule:
//   Approval-CC:   ceil(6 eps^-2 k ln m)
//   Borda-CC:      k^2 * ceil(10 eps^-2 k m^2)
//   Positional-CC: k^2 * ceil(10 eps^-2 k alpha_1^2)
//   Approval-M:    ceil(2 k^2 eps^-2 (2k ln m + ln 4))
//                  (constant from the concentration step: needs
//                  2*exp(-2*t*(eps/2k)^2) <= m^-2k, i.e.
//                  t >= 2 k^2 eps^-2 (2k ln m + ln 2); ln 4 adds slack)
//   Borda-M:       m^2 * (the Approval-M value with eps replaced by eps/m)
// Preconditions: eps in (0, 1], 1 <= k <= m, m >= 2.
SampleParams sample_size(const RuleSpec& rule, double epsilon, int k, int m,
                         double delta = 0.5);

// Space-usage evidence for a sampler run. stored_ballot_cells is
// peak_stored_votes times a per-vote size proxy: m cells for an approval
// ballot, m * ceil(log2 m) for a ranking.
struct StreamStats {
    std::int64_t votes_seen = 0;
    std::int64_t votes_stored = 0;
    std::int64_t peak_stored_votes = 0;
    std::int64_t stored_ballot_cells = 0;
};

std::int64_t ballot_cells_per_vote(int m, BallotType ballot);

// Classic single-pass uniform sample without replacement (Algorithm R):
// keeps at most `capacity` votes regardless of stream length; needs no
// a-priori n.
class ReservoirSampler {
public:
    ReservoirSampler(int m, BallotType ballot, std::int64_t capacity,
                     std::uint64_t seed);

    void observe(Vote vote);
    // Finishes the pass and hands back the sampled election (slot order).
    Election take_sample();
    const StreamStats& stats() const { return stats_; }

private:
    int m_;
    BallotType ballot_;
    std::int64_t capacity_;
    Rng rng_;
    std::vector<Vote> sample_;
    StreamStats stats_;
};

// Retains each vote independently with probability min(1, z / (n * delta));
// with probability at least 1 - delta the sample holds at least z votes.
// Needs the stream length n in advance.
class BernoulliSampler {
public:
    BernoulliSampler(int m, BallotType ballot, std::int64_t n, std::int64_t z,
                     double delta, std::uint64_t seed);

    void observe(Vote vote);
    // Retained votes in arrival order.
    Election take_sample();
    const StreamStats& stats() const { return stats_; }
    double retention_probability() const { return probability_; }

private:
    int m_;
    BallotType ballot_;
    double probability_;
    Rng rng_;
    std::vector<Vote> sample_;
    StreamStats stats_;
};

struct StreamingResult {
    Committee committee;       // lexicographically smallest sampled winner
    Score sample_opt_score = 0;  // that committee's score in the sample
    SampleParams params;
    StreamStats stats;
    bool clamped = false;  // the formula's draw covered the whole stream
};

// The sample-then-solve pipeline: derive SampleParams for the rule, make one
// pass over the stream with the chosen sampler, run exact winner
// determination on the sampled election, and return the lexicographically
// smallest winning committee. Memory is bounded by the sampler, never by n.
// An empty stream yields committee {0, ..., k-1} (every committee ties at 0).
StreamingResult streaming_winner(const std::vector<Vote>& stream, int m,
                                 const RuleSpec& rule, int k, double epsilon,
                                 SamplerChoice sampler, std::uint64_t seed,
                                 double delta = 0.5,
                                 std::uint64_t committee_cap = 1'000'000);

// Same, reading the vote-stream file format in a single pass. The Bernoulli
// sampler needs the stream length up front: pass `n` or get a ParameterError.
StreamingResult streaming_winner(std::istream& in, const RuleSpec& rule, int k,
                                 double epsilon, SamplerChoice sampler,
                                 std::uint64_t seed, double delta = 0.5,
                                 std::optional<std::int64_t> n = std::nullopt,
                                 std::uint64_t committee_cap = 1'000'000);

}  // namespace votestream
