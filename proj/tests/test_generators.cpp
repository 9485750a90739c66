#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support/oracles.hpp"
#include "votestream/generators.hpp"
#include "votestream/winner.hpp"

using namespace votestream;

TEST_SUITE_BEGIN("generators");

TEST_CASE("impartial approval: degenerate probabilities") {
    Election none = gen_impartial_approval(20, 4, 0.0, 1);
    for (const Vote& v : none.votes()) CHECK(v.approved().empty());
    Election all = gen_impartial_approval(20, 4, 1.0, 1);
    for (const Vote& v : all.votes())
        CHECK(v.approved() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("impartial approval: per-candidate frequency near p") {
    const std::int64_t n = 10'000;
    Election e = gen_impartial_approval(n, 6, 0.3, 20240401);
    std::vector<std::int64_t> count(6, 0);
    for (const Vote& v : e.votes())
        for (int c : v.approved()) ++count[static_cast<std::size_t>(c)];
    for (int c = 0; c < 6; ++c) {
        double freq =
            static_cast<double>(count[static_cast<std::size_t>(c)]) / n;
        CHECK(std::abs(freq - 0.3) <= 0.02);
    }
}

TEST_CASE("impartial borda: valid permutations, uniform top candidate") {
    Election single = gen_impartial_borda(5, 1, 7);
    for (const Vote& v : single.votes())
        CHECK(v.order() == std::vector<int>{0});

    const std::int64_t n = 10'000;
    Election e = gen_impartial_borda(n, 4, 31);
    std::vector<std::int64_t> tops(4, 0);
    for (const Vote& v : e.votes()) {
        CHECK(v.order().size() == 4);  // Vote::ranking validated permutation
        ++tops[static_cast<std::size_t>(v.order().front())];
    }
    // Each candidate tops ~ n/4 +- 3 sigma, sigma = sqrt(n * 1/4 * 3/4)
    const double sigma = std::sqrt(n * 0.25 * 0.75);
    for (int c = 0; c < 4; ++c)
        CHECK(std::abs(static_cast<double>(tops[static_cast<std::size_t>(c)]) -
                       n / 4.0) <= 3 * sigma);
}

TEST_CASE("polarized approval blocks") {
    Election one = gen_polarized_approval(6, 4, 1, 3);
    for (const Vote& v : one.votes()) CHECK(v == one.votes().front());

    Election e = gen_polarized_approval(6, 5, 3, 3);
    std::vector<std::int64_t> group_sizes(3, 0);
    for (const Vote& v : e.votes())
        ++group_sizes[static_cast<std::size_t>(v.approved().front())];
    CHECK(group_sizes == std::vector<std::int64_t>{2, 2, 2});

    // disjoint singleton blocks: a committee of all block candidates covers
    // every voter
    WinnerResult r = exact_winner(e, RuleSpec::approval_cc(), 3);
    CHECK(r.opt_score == e.n());
    CHECK_THROWS_AS(gen_polarized_approval(6, 2, 3, 0), ParameterError);
}

TEST_CASE("approval disjointness gadget: the worked example") {
    // U = {x1,x2,x3}, A = {x2}, B = {x1,x2} (0-based: A={1}, B={0,1})
    GadgetSpec spec = GadgetSpec::approval_disjointness(3, {1}, {0, 1});
    Election e = gen_disjointness_approval(spec);
    CHECK(e.m() == 4);  // u + 1, d at index 3
    REQUIRE(e.n() == 7);
    CHECK(e.votes()[0] == Vote::approval({1}, 4));      // v1 = {c2}
    CHECK(e.votes()[1] == Vote::approval({1}, 4));      // v1'
    CHECK(e.votes()[2] == Vote::approval({0, 1}, 4));   // v2 = {c1, c2}
    CHECK(e.votes()[3] == Vote::approval({0, 1}, 4));   // v2'
    for (int i = 4; i < 7; ++i)
        CHECK(e.votes()[static_cast<std::size_t>(i)] ==
              Vote::approval({3}, 4));  // v3..v5 = {d}
}

TEST_CASE("approval disjointness gadget: coverage constants, exhaustive") {
    // u = 4: every pair (A, B) of subsets
    const int u = 4;
    for (unsigned am = 0; am < (1u << u); ++am) {
        for (unsigned bm = 0; bm < (1u << u); ++bm) {
            std::vector<int> a, b;
            for (int i = 0; i < u; ++i) {
                if (am & (1u << i)) a.push_back(i);
                if (bm & (1u << i)) b.push_back(i);
            }
            Election e = gen_disjointness_approval(
                GadgetSpec::approval_disjointness(u, a, b));

            CHECK(testing::cover_count(e, {u}) == 3);  // d covers 3, always
            for (int i = 0; i < u; ++i) {
                const bool in_a = (am >> i) & 1u;
                const bool in_b = (bm >> i) & 1u;
                std::int64_t covered = testing::cover_count(e, {i});
                if (in_a && in_b)
                    CHECK(covered == 4);
                else
                    CHECK(covered <= 2);
            }

            WinnerResult r = exact_winner(e, RuleSpec::approval_cc(), 1);
            const bool disjoint = (am & bm) == 0;
            if (disjoint) {
                REQUIRE(r.winners.size() == 1);
                CHECK(r.winners[0] == Committee::of({u}, e.m()));
            } else {
                for (const Committee& w : r.winners) {
                    int c = w.members().front();
                    CHECK(c < u);
                    CHECK(((am >> c) & 1u));
                    CHECK(((bm >> c) & 1u));
                }
            }
        }
    }
}

TEST_CASE("borda disjointness gadget: the worked example") {
    // U = {x1,x2,x3}, A = {x2}, B = {x1,x2}; m = 13, d = index 3,
    // dummies d_j = index 3 + j.
    GadgetSpec spec = GadgetSpec::borda_disjointness(3, {1}, {0, 1});
    Election e = gen_disjointness_borda(spec);
    CHECK(e.m() == 13);
    REQUIRE(e.n() == 2);
    // v1: c2 d1 d2 d d3 d4 d5 d6 d7 d8 d9 c1 c3
    CHECK(e.votes()[0].order() ==
          std::vector<int>{1, 4, 5, 3, 6, 7, 8, 9, 10, 11, 12, 0, 2});
    // v2: c1 c2 d9 d d8 d7 d6 d5 d4 d3 d2 d1 c3 (construction text; the
    // non-B candidates rank last)
    CHECK(e.votes()[1].order() ==
          std::vector<int>{0, 1, 12, 3, 11, 10, 9, 8, 7, 6, 5, 4, 2});
}

TEST_CASE("borda disjointness gadget: score constants, exhaustive") {
    const int u = 3;
    RuleSpec rule = RuleSpec::borda_cc(4 * u + 1);
    for (unsigned am = 0; am < (1u << u); ++am) {
        for (unsigned bm = 0; bm < (1u << u); ++bm) {
            std::vector<int> a, b;
            for (int i = 0; i < u; ++i) {
                if (am & (1u << i)) a.push_back(i);
                if (bm & (1u << i)) b.push_back(i);
            }
            Election e = gen_disjointness_borda(
                GadgetSpec::borda_disjointness(u, a, b));

            auto borda_score = [&](int c) {
                Score s = 0;
                for (const Vote& v : e.votes()) s += satisfaction(rule, v, c);
                return s;
            };

            CHECK(borda_score(u) == 6 * u);  // s(d) = 6u, always
            for (int i = 0; i < u; ++i)
                if (((am >> i) & 1u) && ((bm >> i) & 1u))
                    CHECK(borda_score(i) >= 6 * u + 2);
            for (int j = 1; j <= 3 * u; ++j)
                CHECK(borda_score(u + j) <= 5 * u);

            WinnerResult r = exact_winner(e, rule, 1);
            const bool disjoint = (am & bm) == 0;
            if (disjoint) {
                REQUIRE(r.winners.size() == 1);
                CHECK(r.winners[0] == Committee::of({u}, e.m()));
            } else {
                CHECK_FALSE(std::find(r.winners.begin(), r.winners.end(),
                                      Committee::of({u}, e.m())) !=
                            r.winners.end());
            }
        }
    }
}

TEST_CASE("heavy hitters gadget") {
    HeavyHittersInstance hh =
        gen_heavy_hitters(GadgetSpec::heavy_hitters({3, 1}));
    CHECK(hh.k == 1);
    CHECK(hh.phi == 0.5);
    CHECK(hh.election.n() == 4);
    WinnerResult r = exact_winner(hh.election, RuleSpec::approval_cc(), 1);
    REQUIRE(r.winners.size() == 1);
    CHECK(r.winners[0] == Committee::of({0}, 2));  // plurality type wins

    HeavyHittersInstance solo =
        gen_heavy_hitters(GadgetSpec::heavy_hitters({5}));
    CHECK(testing::cover_count(solo.election, {0}) == solo.election.n());

    HeavyHittersInstance tie =
        gen_heavy_hitters(GadgetSpec::heavy_hitters({2, 2, 2}));
    WinnerResult rt = exact_winner(tie.election, RuleSpec::approval_cc(), 1);
    CHECK(rt.winners.size() == 3);  // all singletons tie
}

TEST_CASE("generators are deterministic under a fixed seed") {
    CHECK(gen_impartial_approval(50, 5, 0.4, 9).votes() ==
          gen_impartial_approval(50, 5, 0.4, 9).votes());
    CHECK(gen_impartial_borda(50, 5, 9).votes() ==
          gen_impartial_borda(50, 5, 9).votes());
    CHECK(gen_impartial_approval(50, 5, 0.4, 9).votes() !=
          gen_impartial_approval(50, 5, 0.4, 10).votes());
}

TEST_CASE("gadget specs validate their subsets") {
    CHECK_THROWS_AS(GadgetSpec::approval_disjointness(3, {3}, {}),
                    ParameterError);
    CHECK_THROWS_AS(GadgetSpec::approval_disjointness(3, {0, 0}, {}),
                    ParameterError);
    CHECK_THROWS_AS(GadgetSpec::heavy_hitters({}), ParameterError);
    CHECK_THROWS_AS(GadgetSpec::heavy_hitters({-1}), ParameterError);
    // variant/function mismatch
    GadgetSpec approval = GadgetSpec::approval_disjointness(2, {0}, {1});
    CHECK_THROWS_AS(gen_disjointness_borda(approval), ParameterError);
}

TEST_SUITE_END();
