#include "votestream/generators.hpp"

#include <algorithm>

#include "votestream/rng.hpp"

namespace votestream {

Election gen_impartial_approval(std::int64_t n, int m, double p,
                                std::uint64_t seed) {
    if (n < 0) throw ParameterError("n must be >= 0");
    if (m < 1) throw ParameterError("m must be >= 1");
    if (p < 0.0 || p > 1.0) throw ParameterError("p must be in [0, 1]");
    Rng rng(seed);
    std::vector<Vote> votes;
    votes.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        std::vector<int> approved;
        for (int c = 0; c < m; ++c)
            if (rng.bernoulli(p)) approved.push_back(c);
        votes.push_back(Vote::approval(std::move(approved), m));
    }
    return Election(m, BallotType::approval, std::move(votes));
}

Election gen_impartial_borda(std::int64_t n, int m, std::uint64_t seed) {
    if (n < 0) throw ParameterError("n must be >= 0");
    if (m < 1) throw ParameterError("m must be >= 1");
    Rng rng(seed);
    std::vector<Vote> votes;
    votes.reserve(static_cast<std::size_t>(n));
    std::vector<int> order(static_cast<std::size_t>(m));
    for (std::int64_t i = 0; i < n; ++i) {
        for (int c = 0; c < m; ++c) order[static_cast<std::size_t>(c)] = c;
        rng.shuffle(order);
        votes.push_back(Vote::ranking(order, m));
    }
    return Election(m, BallotType::ranking, std::move(votes));
}

Election gen_polarized_approval(std::int64_t n, int m, int blocks,
                                std::uint64_t seed) {
    (void)seed;  // deterministic workload; seed kept for interface symmetry
    if (n < 0) throw ParameterError("n must be >= 0");
    if (blocks < 1 || blocks > m)
        throw ParameterError("need 1 <= blocks <= m");
    std::vector<Vote> votes;
    votes.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        int group = static_cast<int>(i % blocks);
        votes.push_back(Vote::approval({group}, m));
    }
    return Election(m, BallotType::approval, std::move(votes));
}

namespace {

std::vector<int> checked_subset(std::vector<int> xs, int u,
                                const char* which) {
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i] < 0 || xs[i] >= u)
            throw ParameterError(std::string(which) + " element " +
                                 std::to_string(xs[i]) +
                                 " outside the universe [0, " +
                                 std::to_string(u) + ")");
        if (i > 0 && xs[i] == xs[i - 1])
            throw ParameterError(std::string(which) +
                                 " contains a duplicate element");
    }
    return xs;
}

}  // namespace

GadgetSpec GadgetSpec::approval_disjointness(int u, std::vector<int> a,
                                             std::vector<int> b) {
    if (u < 1) throw ParameterError("universe size must be >= 1");
    GadgetSpec spec;
    spec.variant = GadgetVariant::approval_disjointness;
    spec.universe_size = u;
    spec.a = checked_subset(std::move(a), u, "A");
    spec.b = checked_subset(std::move(b), u, "B");
    return spec;
}

GadgetSpec GadgetSpec::borda_disjointness(int u, std::vector<int> a,
                                          std::vector<int> b) {
    GadgetSpec spec = approval_disjointness(u, std::move(a), std::move(b));
    spec.variant = GadgetVariant::borda_disjointness;
    return spec;
}

GadgetSpec GadgetSpec::heavy_hitters(std::vector<std::int64_t> item_counts) {
    if (item_counts.empty())
        throw ParameterError("need at least one item type");
    for (std::int64_t c : item_counts)
        if (c < 0) throw ParameterError("item counts must be >= 0");
    GadgetSpec spec;
    spec.variant = GadgetVariant::heavy_hitters;
    spec.item_counts = std::move(item_counts);
    return spec;
}

Election gen_disjointness_approval(const GadgetSpec& spec) {
    if (spec.variant != GadgetVariant::approval_disjointness)
        throw ParameterError("spec is not an approval-disjointness gadget");
    const int u = spec.universe_size;
    const int m = u + 1;
    const int d = u;

    std::vector<Vote> votes;
    votes.reserve(7);
    Vote alice = Vote::approval(spec.a, m);
    Vote bob = Vote::approval(spec.b, m);
    votes.push_back(alice);
    votes.push_back(alice);
    votes.push_back(bob);
    votes.push_back(bob);
    for (int i = 0; i < 3; ++i) votes.push_back(Vote::approval({d}, m));
    return Election(m, BallotType::approval, std::move(votes));
}

Election gen_disjointness_borda(const GadgetSpec& spec) {
    if (spec.variant != GadgetVariant::borda_disjointness)
        throw ParameterError("spec is not a borda-disjointness gadget");
    const int u = spec.universe_size;
    const int m = 4 * u + 1;
    const int d = u;
    auto dummy = [u](int j) { return u + j; };  // d_j, j in 1..3u

    std::vector<bool> in_a(static_cast<std::size_t>(u), false);
    std::vector<bool> in_b(static_cast<std::size_t>(u), false);
    for (int x : spec.a) in_a[static_cast<std::size_t>(x)] = true;
    for (int x : spec.b) in_b[static_cast<std::size_t>(x)] = true;
    const int a_size = static_cast<int>(spec.a.size());
    const int b_size = static_cast<int>(spec.b.size());

    // v1: A's candidates, dummies d_1..d_{u-|A|}, d, dummies
    // d_{u-|A|+1}..d_{3u}, non-A candidates.
    std::vector<int> v1;
    v1.reserve(static_cast<std::size_t>(m));
    for (int x : spec.a) v1.push_back(x);
    for (int j = 1; j <= u - a_size; ++j) v1.push_back(dummy(j));
    v1.push_back(d);
    for (int j = u - a_size + 1; j <= 3 * u; ++j) v1.push_back(dummy(j));
    for (int x = 0; x < u; ++x)
        if (!in_a[static_cast<std::size_t>(x)]) v1.push_back(x);

    // v2: B's candidates, dummies d_{3u}..d_{3u-(u-|B|)+1} (descending), d,
    // the remaining dummies descending down to d_1, non-B candidates.
    std::vector<int> v2;
    v2.reserve(static_cast<std::size_t>(m));
    for (int x : spec.b) v2.push_back(x);
    for (int j = 3 * u; j > 3 * u - (u - b_size); --j) v2.push_back(dummy(j));
    v2.push_back(d);
    for (int j = 3 * u - (u - b_size); j >= 1; --j) v2.push_back(dummy(j));
    for (int x = 0; x < u; ++x)
        if (!in_b[static_cast<std::size_t>(x)]) v2.push_back(x);

    std::vector<Vote> votes;
    votes.push_back(Vote::ranking(std::move(v1), m));
    votes.push_back(Vote::ranking(std::move(v2), m));
    return Election(m, BallotType::ranking, std::move(votes));
}

HeavyHittersInstance gen_heavy_hitters(const GadgetSpec& spec) {
    if (spec.variant != GadgetVariant::heavy_hitters)
        throw ParameterError("spec is not a heavy-hitters gadget");
    const int m = static_cast<int>(spec.item_counts.size());
    std::vector<Vote> votes;
    for (int type = 0; type < m; ++type)
        for (std::int64_t i = 0;
             i < spec.item_counts[static_cast<std::size_t>(type)]; ++i)
            votes.push_back(Vote::approval({type}, m));
    return HeavyHittersInstance{
        Election(m, BallotType::approval, std::move(votes)), 1, 0.5};
}

}  // namespace votestream
