#include "votestream/streaming.hpp"

#include <algorithm>
#include <cmath>
#include <istream>

#include "votestream/io.hpp"

namespace votestream {

namespace {

// ceil() in double then a checked conversion; the formulas can explode for
// tiny epsilon long before memory would.
std::int64_t ceil_to_count(double x) {
    double c = std::ceil(x);
    if (!(c >= 1.0)) return 1;  // t >= 1 floor, also catches NaN
    if (c > 4.0e18) throw ParameterError("sample size overflows: " +
                                         std::to_string(x));
    return static_cast<std::int64_t>(c);
}

std::int64_t approval_monroe_draw(double epsilon, int k, int m) {
    const double kk = static_cast<double>(k);
    return ceil_to_count(2.0 * kk * kk / (epsilon * epsilon) *
                         (2.0 * kk * std::log(m) + std::log(4.0)));
}

}  // namespace

SampleParams sample_size(const RuleSpec& rule, double epsilon, int k, int m,
                         double delta) {
    if (!(epsilon > 0.0) || epsilon > 1.0)
        throw ParameterError("epsilon must be in (0, 1]");
    if (m < 2) throw ParameterError("sampling formulas need m >= 2");
    if (k < 1 || k > m) throw ParameterError("need 1 <= k <= m");
    if (!(delta > 0.0) || delta >= 1.0)
        throw ParameterError("delta must be in (0, 1)");
    if (!rule.is_approval() && rule.positional_m() != m)
        throw ParameterError("rule's score vector length differs from m");

    SampleParams params;
    params.epsilon = epsilon;
    params.k = k;
    params.m = m;
    params.delta = delta;

    const double eps2 = epsilon * epsilon;
    const double kk = static_cast<double>(k);
    const double mm = static_cast<double>(m);

    if (rule.family() == RuleFamily::chamberlin_courant) {
        if (rule.is_approval()) {
            params.t = ceil_to_count(6.0 / eps2 * kk * std::log(mm));
            params.draw_size = params.t;
        } else if (rule.is_borda()) {
            params.t = ceil_to_count(10.0 / eps2 * kk * mm * mm);
            params.draw_size = static_cast<std::int64_t>(k) * k * params.t;
        } else {
            const double a1 =
                static_cast<double>(rule.score_vector().front());
            params.t = ceil_to_count(10.0 / eps2 * kk * a1 * a1);
            params.draw_size = static_cast<std::int64_t>(k) * k * params.t;
        }
    } else {
        if (rule.is_approval()) {
            params.t = approval_monroe_draw(epsilon, k, m);
            params.draw_size = params.t;
        } else if (rule.is_borda()) {
            params.t = approval_monroe_draw(epsilon / mm, k, m);
            params.draw_size = static_cast<std::int64_t>(m) * m * params.t;
        } else {
            throw ParameterError(
                "no sampling formula for a general positional Monroe rule");
        }
    }
    return params;
}

std::int64_t ballot_cells_per_vote(int m, BallotType ballot) {
    if (ballot == BallotType::approval) return m;
    std::int64_t log2m = 1;
    while ((std::int64_t{1} << log2m) < m) ++log2m;
    return static_cast<std::int64_t>(m) * log2m;
}

ReservoirSampler::ReservoirSampler(int m, BallotType ballot,
                                   std::int64_t capacity, std::uint64_t seed)
    : m_(m), ballot_(ballot), capacity_(capacity), rng_(seed) {
    if (capacity < 1) throw ParameterError("reservoir capacity must be >= 1");
    sample_.reserve(static_cast<std::size_t>(
        std::min<std::int64_t>(capacity, 1 << 20)));
}

void ReservoirSampler::observe(Vote vote) {
    ++stats_.votes_seen;
    if (static_cast<std::int64_t>(sample_.size()) < capacity_) {
        sample_.push_back(std::move(vote));
    } else {
        // Keep the newcomer with probability capacity/seen.
        auto slot = rng_.below(static_cast<std::uint64_t>(stats_.votes_seen));
        if (slot < static_cast<std::uint64_t>(capacity_))
            sample_[static_cast<std::size_t>(slot)] = std::move(vote);
    }
    stats_.votes_stored = static_cast<std::int64_t>(sample_.size());
    stats_.peak_stored_votes =
        std::max(stats_.peak_stored_votes, stats_.votes_stored);
    stats_.stored_ballot_cells =
        stats_.peak_stored_votes * ballot_cells_per_vote(m_, ballot_);
}

Election ReservoirSampler::take_sample() {
    return Election(m_, ballot_, std::move(sample_));
}

BernoulliSampler::BernoulliSampler(int m, BallotType ballot, std::int64_t n,
                                   std::int64_t z, double delta,
                                   std::uint64_t seed)
    : m_(m), ballot_(ballot), rng_(seed) {
    if (n < 0) throw ParameterError("stream length must be >= 0");
    if (z < 1) throw ParameterError("target sample size must be >= 1");
    if (!(delta > 0.0) || delta >= 1.0)
        throw ParameterError("delta must be in (0, 1)");
    probability_ =
        n == 0 ? 1.0
               : std::min(1.0, static_cast<double>(z) /
                                   (static_cast<double>(n) * delta));
}

void BernoulliSampler::observe(Vote vote) {
    ++stats_.votes_seen;
    if (probability_ >= 1.0 || rng_.bernoulli(probability_))
        sample_.push_back(std::move(vote));
    stats_.votes_stored = static_cast<std::int64_t>(sample_.size());
    stats_.peak_stored_votes =
        std::max(stats_.peak_stored_votes, stats_.votes_stored);
    stats_.stored_ballot_cells =
        stats_.peak_stored_votes * ballot_cells_per_vote(m_, ballot_);
}

Election BernoulliSampler::take_sample() {
    return Election(m_, ballot_, std::move(sample_));
}

namespace {

StreamingResult solve_sample(Election sampled, const SampleParams& params,
                             const RuleSpec& rule, int k, StreamStats stats,
                             bool clamped, std::uint64_t committee_cap) {
    WinnerResult winners = exact_winner(sampled, rule, k, committee_cap);
    StreamingResult result{winners.reported(), winners.opt_score, params,
                           stats, clamped};
    return result;
}

}  // namespace

StreamingResult streaming_winner(const std::vector<Vote>& stream, int m,
                                 const RuleSpec& rule, int k, double epsilon,
                                 SamplerChoice sampler, std::uint64_t seed,
                                 double delta, std::uint64_t committee_cap) {
    SampleParams params = sample_size(rule, epsilon, k, m, delta);
    const auto n = static_cast<std::int64_t>(stream.size());

    if (sampler == SamplerChoice::reservoir) {
        ReservoirSampler res(m, rule.ballot(), params.draw_size, seed);
        for (const Vote& v : stream) res.observe(v);
        StreamStats stats = res.stats();
        return solve_sample(res.take_sample(), params, rule, k, stats,
                            params.draw_size >= n, committee_cap);
    }
    BernoulliSampler ber(m, rule.ballot(), n, params.draw_size, delta, seed);
    for (const Vote& v : stream) ber.observe(v);
    StreamStats stats = ber.stats();
    return solve_sample(ber.take_sample(), params, rule, k, stats,
                        ber.retention_probability() >= 1.0, committee_cap);
}

StreamingResult streaming_winner(std::istream& in, const RuleSpec& rule, int k,
                                 double epsilon, SamplerChoice sampler,
                                 std::uint64_t seed, double delta,
                                 std::optional<std::int64_t> n,
                                 std::uint64_t committee_cap) {
    if (sampler == SamplerChoice::bernoulli && !n)
        throw ParameterError(
            "the Bernoulli sampler needs the stream length n in advance");

    // Peek the header first so the sampler knows m and the ballot type; the
    // vote lines are then consumed strictly once.
    std::string line;
    std::size_t line_no = 0;
    for (;;) {
        if (!std::getline(in, line))
            throw ParseError("missing stream header", line_no);
        ++line_no;
        if (line.empty() || line[0] != '#') break;
    }
    StreamHeader header = parse_stream_header(line, line_no);
    if (rule.ballot() != header.ballot)
        throw ParameterError("rule " + rule.name() +
                             " does not match the stream's ballot type");

    SampleParams params = sample_size(rule, epsilon, k, header.m, delta);

    auto consume = [&](auto& sampler_obj) {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line[0] == '#') continue;
            sampler_obj.observe(
                parse_vote(line, header.m, header.ballot, line_no));
        }
    };

    if (sampler == SamplerChoice::reservoir) {
        ReservoirSampler res(header.m, header.ballot, params.draw_size, seed);
        consume(res);
        StreamStats stats = res.stats();
        return solve_sample(res.take_sample(), params, rule, k, stats,
                            params.draw_size >= stats.votes_seen,
                            committee_cap);
    }
    BernoulliSampler ber(header.m, header.ballot, *n, params.draw_size, delta,
                         seed);
    consume(ber);
    StreamStats stats = ber.stats();
    return solve_sample(ber.take_sample(), params, rule, k, stats,
                        ber.retention_probability() >= 1.0, committee_cap);
}

}  // namespace votestream
