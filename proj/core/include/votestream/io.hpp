#pragma once

#include <functional>
#include <iosfwd>
#include <string>

#include "votestream/types.hpp"

namespace votestream {

// Vote-stream file format (line-oriented UTF-8 text):
//   line 1:  "<ballot> <m>"   with ballot in {approval, borda}
//   then one vote per line -- approval: space-separated candidate indices in
//   any order (an empty line is an empty ballot); borda: a permutation of
//   0..m-1, most-preferred first.
// Lines starting with '#' are comments and are ignored anywhere.

struct StreamHeader {
    BallotType ballot;
    int m;
};

// Parses the "<ballot> <m>" header line; m must be >= 1.
StreamHeader parse_stream_header(const std::string& line,
                                 std::size_t line_no = 0);

// Parses one vote line against the declared header.
Vote parse_vote(const std::string& line, int m, BallotType ballot,
                std::size_t line_no = 0);

std::string serialize_header(BallotType ballot, int m);
std::string serialize_vote(const Vote& vote);

// Single-pass reader: parses the header, then hands each vote to fn in
// arrival order. This is the streaming entry point; it never stores votes.
StreamHeader for_each_vote(std::istream& in,
                           const std::function<void(Vote&&)>& fn);

// Reads and materializes a whole election (oracle/desk-scale paths).
Election read_election(std::istream& in);

void write_election(std::ostream& out, const Election& election);

}  // namespace votestream
