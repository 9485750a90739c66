#pragma once

#include <cstdint>

#include "votestream/types.hpp"

namespace votestream {

// n i.i.d. approval ballots; each candidate approved independently with
// probability p.
Election gen_impartial_approval(std::int64_t n, int m, double p,
                                std::uint64_t seed);

// n i.i.d. uniform random rankings (Fisher-Yates from the seeded generator).
Election gen_impartial_borda(std::int64_t n, int m, std::uint64_t seed);

// Voters split evenly into `blocks` groups (round-robin, so group sizes
// differ by at most one); every voter in group g approves exactly {g}.
// Requires blocks <= m. A stress case where CC and Monroe pull apart.
Election gen_polarized_approval(std::int64_t n, int m, int blocks,
                                std::uint64_t seed);

// Adversarial instances built from Set Disjointness / Heavy Hitters inputs.
// Element x_i of the universe maps to candidate index i-1, the distinguished
// candidate d to index u; Borda dummies d_j map to u + j.
enum class GadgetVariant {
    approval_disjointness,
    borda_disjointness,
    heavy_hitters
};

struct GadgetSpec {
    GadgetVariant variant;
    int universe_size = 0;             // u
    std::vector<int> a;                // Alice's subset, 0-based, sorted
    std::vector<int> b;                // Bob's subset, 0-based, sorted
    std::vector<std::int64_t> item_counts;  // heavy-hitters multiplicities

    static GadgetSpec approval_disjointness(int u, std::vector<int> a,
                                            std::vector<int> b);
    static GadgetSpec borda_disjointness(int u, std::vector<int> a,
                                         std::vector<int> b);
    static GadgetSpec heavy_hitters(std::vector<std::int64_t> item_counts);
};

// Seven approval voters over u+1 candidates: v1, v1' approve A's candidates;
// v2, v2' approve B's; v3, v4, v5 approve only d. With k=1, d covers 3
// voters, a non-shared c_i at most 2, a shared c_i exactly 4 -- so {d} wins
// iff A and B are disjoint.
Election gen_disjointness_approval(const GadgetSpec& spec);

// Two ranking voters over 4u+1 candidates. v1: A's candidates ascending,
// dummies d_1..d_{u-|A|}, then d, the remaining dummies ascending, then
// non-A candidates ascending. v2 mirrors for B with the dummy order
// reversed. s(d) = 6u always; a shared c_i scores >= 6u+2; dummies <= 5u.
Election gen_disjointness_borda(const GadgetSpec& spec);

// One single-approval ballot per item occurrence, grouped by type. The
// frequency question "does type i occur >= phi * n times" becomes the k=1
// Approval-CC winner question.
struct HeavyHittersInstance {
    Election election;
    int k = 1;
    double phi = 0.5;
};

HeavyHittersInstance gen_heavy_hitters(const GadgetSpec& spec);

}  // namespace votestream
