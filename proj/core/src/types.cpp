#include "votestream/types.hpp"

#include <algorithm>
#include <sstream>

namespace votestream {

Vote Vote::approval(std::vector<int> approved, int m) {
    std::sort(approved.begin(), approved.end());
    for (std::size_t i = 0; i < approved.size(); ++i) {
        if (approved[i] < 0 || approved[i] >= m)
            throw ParameterError("approval index " +
                                 std::to_string(approved[i]) +
                                 " out of range [0, " + std::to_string(m) + ")");
        if (i > 0 && approved[i] == approved[i - 1])
            throw ParameterError("duplicate approval index " +
                                 std::to_string(approved[i]));
    }
    return Vote(BallotType::approval, std::move(approved));
}

Vote Vote::ranking(std::vector<int> order, int m) {
    if (static_cast<int>(order.size()) != m)
        throw ParameterError("ranking has " + std::to_string(order.size()) +
                             " entries, expected " + std::to_string(m));
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int c : order) {
        if (c < 0 || c >= m)
            throw ParameterError("ranking entry " + std::to_string(c) +
                                 " out of range [0, " + std::to_string(m) + ")");
        if (seen[static_cast<std::size_t>(c)])
            throw ParameterError("ranking repeats candidate " +
                                 std::to_string(c));
        seen[static_cast<std::size_t>(c)] = true;
    }
    return Vote(BallotType::ranking, std::move(order));
}

const std::vector<int>& Vote::approved() const {
    if (type_ != BallotType::approval)
        throw ParameterError("approved() on a ranking ballot");
    return items_;
}

const std::vector<int>& Vote::order() const {
    if (type_ != BallotType::ranking)
        throw ParameterError("order() on an approval ballot");
    return items_;
}

bool Vote::approves(int candidate) const {
    if (type_ != BallotType::approval)
        throw ParameterError("approves() on a ranking ballot");
    return std::binary_search(items_.begin(), items_.end(), candidate);
}

int Vote::position_of(int candidate) const {
    if (type_ != BallotType::ranking)
        throw ParameterError("position_of() on an approval ballot");
    auto it = std::find(items_.begin(), items_.end(), candidate);
    if (it == items_.end())
        throw ParameterError("candidate " + std::to_string(candidate) +
                             " not in ranking");
    return static_cast<int>(it - items_.begin());
}

Election::Election(int m, BallotType ballot, std::vector<Vote> votes)
    : m_(m), ballot_(ballot), votes_(std::move(votes)) {
    if (m < 1) throw ParameterError("candidate count must be >= 1");
    for (const Vote& v : votes_) {
        if (v.type() != ballot)
            throw ParameterError("vote ballot type differs from election's");
        if (ballot == BallotType::ranking) {
            if (static_cast<int>(v.order().size()) != m)
                throw ParameterError("ranking vote sized for a different m");
        } else if (!v.approved().empty() && v.approved().back() >= m) {
            throw ParameterError("approval vote references candidate >= m");
        }
    }
}

Committee Committee::of(std::vector<int> members, int m) {
    if (members.empty()) throw ParameterError("committee must be non-empty");
    std::sort(members.begin(), members.end());
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 0 || members[i] >= m)
            throw ParameterError("committee member " +
                                 std::to_string(members[i]) +
                                 " out of range [0, " + std::to_string(m) + ")");
        if (i > 0 && members[i] == members[i - 1])
            throw ParameterError("duplicate committee member " +
                                 std::to_string(members[i]));
    }
    return Committee(std::move(members));
}

bool Committee::contains(int candidate) const {
    return std::binary_search(members_.begin(), members_.end(), candidate);
}

std::string Committee::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out << ", ";
        out << members_[i];
    }
    out << '}';
    return out.str();
}

namespace {

void validate_score_vector(const std::vector<Score>& sv) {
    if (sv.empty()) throw ParameterError("score vector must be non-empty");
    if (sv.back() != 0) throw ParameterError("score vector must end in 0");
    bool has_unit_gap = false;
    bool all_zero = sv.front() == 0;
    for (std::size_t i = 0; i + 1 < sv.size(); ++i) {
        if (sv[i] < sv[i + 1])
            throw ParameterError("score vector must be non-increasing");
        if (sv[i] - sv[i + 1] == 1) has_unit_gap = true;
    }
    // Normalized form: some consecutive gap equals 1. The all-zero vector is
    // the degenerate normalization of a constant vector and is allowed; its
    // committees all tie at 0.
    if (!has_unit_gap && !all_zero)
        throw ParameterError("score vector not normalized (no unit gap)");
}

std::vector<Score> borda_vector(int m) {
    if (m < 1) throw ParameterError("borda rule needs m >= 1");
    std::vector<Score> sv(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) sv[static_cast<std::size_t>(i)] = m - 1 - i;
    return sv;
}

}  // namespace

RuleSpec RuleSpec::approval_cc() {
    return RuleSpec(RuleFamily::chamberlin_courant, {});
}

RuleSpec RuleSpec::approval_monroe() { return RuleSpec(RuleFamily::monroe, {}); }

RuleSpec RuleSpec::borda_cc(int m) {
    return RuleSpec(RuleFamily::chamberlin_courant, borda_vector(m));
}

RuleSpec RuleSpec::borda_monroe(int m) {
    return RuleSpec(RuleFamily::monroe, borda_vector(m));
}

RuleSpec RuleSpec::positional_cc(std::vector<Score> score_vector) {
    validate_score_vector(score_vector);
    return RuleSpec(RuleFamily::chamberlin_courant, std::move(score_vector));
}

RuleSpec RuleSpec::positional_monroe(std::vector<Score> score_vector) {
    validate_score_vector(score_vector);
    return RuleSpec(RuleFamily::monroe, std::move(score_vector));
}

bool RuleSpec::is_borda() const {
    if (score_vector_.empty()) return false;
    const auto m = static_cast<int>(score_vector_.size());
    for (int i = 0; i < m; ++i)
        if (score_vector_[static_cast<std::size_t>(i)] != m - 1 - i)
            return false;
    return true;
}

std::string RuleSpec::name() const {
    std::string ballot_part =
        is_approval() ? "approval" : (is_borda() ? "borda" : "positional");
    std::string family_part =
        family_ == RuleFamily::chamberlin_courant ? "cc" : "m";
    return ballot_part + "-" + family_part;
}

Score satisfaction(const RuleSpec& rule, const Vote& vote, int candidate) {
    if (vote.type() != rule.ballot())
        throw ParameterError("ballot type does not match the rule (" +
                             rule.name() + ")");
    if (candidate < 0) throw ParameterError("negative candidate index");
    if (rule.is_approval()) return vote.approves(candidate) ? 1 : 0;
    const auto& sv = rule.score_vector();
    if (vote.order().size() != sv.size())
        throw ParameterError("ranking length differs from the rule's m");
    return sv[static_cast<std::size_t>(vote.position_of(candidate))];
}

}  // namespace votestream
