#include "votestream/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace votestream {

namespace {

bool is_comment(const std::string& line) {
    return !line.empty() && line[0] == '#';
}

std::vector<int> parse_indices(const std::string& line, std::size_t line_no) {
    std::istringstream tokens(line);
    std::vector<int> out;
    std::string tok;
    while (tokens >> tok) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw ParseError("not a candidate index: '" + tok + "'", line_no);
        }
        if (used != tok.size())
            throw ParseError("not a candidate index: '" + tok + "'", line_no);
        out.push_back(value);
    }
    return out;
}

}  // namespace

StreamHeader parse_stream_header(const std::string& line,
                                 std::size_t line_no) {
    std::istringstream tokens(line);
    std::string ballot_word;
    long long m = 0;
    std::string extra;
    if (!(tokens >> ballot_word >> m) || (tokens >> extra))
        throw ParseError("expected header '<approval|borda> <m>', got '" +
                             line + "'",
                         line_no);
    BallotType ballot;
    if (ballot_word == "approval")
        ballot = BallotType::approval;
    else if (ballot_word == "borda")
        ballot = BallotType::ranking;
    else
        throw ParseError("unknown ballot kind '" + ballot_word + "'", line_no);
    if (m < 1)
        throw ParseError("candidate count must be >= 1, got " +
                             std::to_string(m),
                         line_no);
    if (m > 1'000'000)
        throw ParseError("candidate count too large: " + std::to_string(m),
                         line_no);
    return StreamHeader{ballot, static_cast<int>(m)};
}

Vote parse_vote(const std::string& line, int m, BallotType ballot,
                std::size_t line_no) {
    std::vector<int> indices = parse_indices(line, line_no);
    try {
        if (ballot == BallotType::approval)
            return Vote::approval(std::move(indices), m);
        return Vote::ranking(std::move(indices), m);
    } catch (const ParameterError& e) {
        throw ParseError(e.what(), line_no);
    }
}

std::string serialize_header(BallotType ballot, int m) {
    return (ballot == BallotType::approval ? std::string("approval ")
                                           : std::string("borda ")) +
           std::to_string(m);
}

std::string serialize_vote(const Vote& vote) {
    const std::vector<int>& items = vote.type() == BallotType::approval
                                        ? vote.approved()
                                        : vote.order();
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(items[i]);
    }
    return out;
}

StreamHeader for_each_vote(std::istream& in,
                           const std::function<void(Vote&&)>& fn) {
    std::string line;
    std::size_t line_no = 0;

    // Header: first non-comment line.
    for (;;) {
        if (!std::getline(in, line))
            throw ParseError("missing stream header", line_no);
        ++line_no;
        if (!is_comment(line)) break;
    }
    StreamHeader header = parse_stream_header(line, line_no);

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment(line)) continue;
        fn(parse_vote(line, header.m, header.ballot, line_no));
    }
    return header;
}

Election read_election(std::istream& in) {
    std::vector<Vote> votes;
    StreamHeader header =
        for_each_vote(in, [&](Vote&& v) { votes.push_back(std::move(v)); });
    return Election(header.m, header.ballot, std::move(votes));
}

void write_election(std::ostream& out, const Election& election) {
    out << serialize_header(election.ballot(), election.m()) << '\n';
    for (const Vote& v : election.votes()) out << serialize_vote(v) << '\n';
}

}  // namespace votestream
