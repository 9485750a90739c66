#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace votestream {

// Satisfaction values and committee scores. Signed 64-bit: desk-scale
// elections (n up to ~10^6, per-voter satisfaction up to m-1) stay far from
// the limits.
using Score = std::int64_t;

// Contract violation on an operation's inputs: bad epsilon, k > m,
// ballot/rule mismatch, malformed committee or score vector, ...
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed vote-stream text. Carries the 1-based line number when known
// (0 = unknown).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                  : what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// An exact/exhaustive routine was asked to run beyond its size bound
// (committee enumeration cap, brute-force oracle bounds).
class ScaleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class BallotType { approval, ranking };

// One voter's ballot. Approval: the set of approved candidate indices,
// stored sorted ascending (canonical). Ranking: a permutation of 0..m-1,
// most-preferred first.
class Vote {
public:
    // Builds an approval ballot over m candidates. Sorts, rejects duplicates
    // and out-of-range indices. An empty set is legal (approves nobody).
    static Vote approval(std::vector<int> approved, int m);

    // Builds a ranking ballot; order must be a permutation of 0..m-1.
    static Vote ranking(std::vector<int> order, int m);

    BallotType type() const { return type_; }

    // Approval ballots only: sorted approved indices.
    const std::vector<int>& approved() const;

    // Ranking ballots only: candidates most-preferred first.
    const std::vector<int>& order() const;

    // Approval ballots only.
    bool approves(int candidate) const;

    // Ranking ballots only: 0-based position of the candidate.
    int position_of(int candidate) const;

    bool operator==(const Vote& other) const = default;

private:
    Vote(BallotType type, std::vector<int> items)
        : type_(type), items_(std::move(items)) {}

    BallotType type_;
    std::vector<int> items_;
};

// An election: candidate count m plus the votes in arrival order, all of one
// ballot type. Immutable after construction.
class Election {
public:
    Election(int m, BallotType ballot, std::vector<Vote> votes = {});

    int m() const { return m_; }
    BallotType ballot() const { return ballot_; }
    std::int64_t n() const { return static_cast<std::int64_t>(votes_.size()); }
    const std::vector<Vote>& votes() const { return votes_; }

private:
    int m_;
    BallotType ballot_;
    std::vector<Vote> votes_;
};

// A size-k subset of candidates, stored sorted ascending. The sorted form is
// the canonical one used for equality, ordering and tie-breaking.
class Committee {
public:
    // Validates: non-empty, distinct, all indices in [0, m).
    static Committee of(std::vector<int> members, int m);

    const std::vector<int>& members() const { return members_; }
    int k() const { return static_cast<int>(members_.size()); }
    bool contains(int candidate) const;

    bool operator==(const Committee& other) const = default;
    auto operator<=>(const Committee& other) const = default;

    std::string to_string() const;  // e.g. "{0, 2}"

private:
    explicit Committee(std::vector<int> members)
        : members_(std::move(members)) {}

    std::vector<int> members_;
};

enum class RuleFamily { chamberlin_courant, monroe };

// Which rule is in force: CC or Monroe crossed with the ballot kind. Approval
// rules carry no score vector; positional rules carry a normalized
// non-increasing vector (alpha_1 >= ... >= alpha_m = 0, some consecutive gap
// equal to 1 unless the vector is all zeros). Borda is the positional
// instance (m-1, m-2, ..., 0).
class RuleSpec {
public:
    static RuleSpec approval_cc();
    static RuleSpec approval_monroe();
    static RuleSpec borda_cc(int m);
    static RuleSpec borda_monroe(int m);
    static RuleSpec positional_cc(std::vector<Score> score_vector);
    static RuleSpec positional_monroe(std::vector<Score> score_vector);

    RuleFamily family() const { return family_; }
    BallotType ballot() const {
        return score_vector_.empty() ? BallotType::approval
                                     : BallotType::ranking;
    }
    bool is_approval() const { return score_vector_.empty(); }
    bool is_borda() const;

    // Positional rules only; empty for approval.
    const std::vector<Score>& score_vector() const { return score_vector_; }

    // Candidate count implied by the score vector (positional rules only).
    int positional_m() const { return static_cast<int>(score_vector_.size()); }

    // Largest per-voter satisfaction the rule can award: 1 for approval,
    // alpha_1 for positional. This is the Delta of the surrogate gap check.
    Score max_satisfaction() const {
        return score_vector_.empty() ? 1 : score_vector_.front();
    }

    std::string name() const;  // "approval-cc", "borda-m", "positional-cc", ...

private:
    RuleSpec(RuleFamily family, std::vector<Score> score_vector)
        : family_(family), score_vector_(std::move(score_vector)) {}

    RuleFamily family_;
    std::vector<Score> score_vector_;  // empty = approval ballot
};

// Satisfaction of the voter when represented by the candidate: approval
// indicator for approval rules, score_vector[position] for positional rules
// (Borda: m - 1-based position). Throws ParameterError on ballot/rule
// mismatch.
Score satisfaction(const RuleSpec& rule, const Vote& vote, int candidate);

}  // namespace votestream
