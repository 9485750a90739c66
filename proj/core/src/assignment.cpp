#include "votestream/assignment.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

namespace votestream {

namespace {

constexpr Score kInf = std::numeric_limits<Score>::max() / 4;

// Minimal successive-shortest-path min-cost max-flow. Instances here are
// tiny: voter classes + committee members + slack, so Dijkstra with
// potentials and a binary heap is plenty.
class MinCostFlow {
public:
    explicit MinCostFlow(int node_count)
        : graph_(static_cast<std::size_t>(node_count)) {}

    // Adds arc from -> to and returns its index (for flow readback).
    std::size_t add_edge(int from, int to, Score capacity, Score cost) {
        graph_[static_cast<std::size_t>(from)].push_back(
            static_cast<int>(edges_.size()));
        edges_.push_back({to, capacity, cost});
        graph_[static_cast<std::size_t>(to)].push_back(
            static_cast<int>(edges_.size()));
        edges_.push_back({from, 0, -cost});
        return edges_.size() - 2;
    }

    // Sends up to max_flow units from source to sink; returns (flow, cost).
    // All original costs must be non-negative.
    std::pair<Score, Score> run(int source, int sink, Score max_flow) {
        const auto node_count = graph_.size();
        std::vector<Score> potential(node_count, 0);
        Score flow = 0;
        Score cost = 0;
        while (flow < max_flow) {
            std::vector<Score> dist(node_count, kInf);
            std::vector<int> prev_edge(node_count, -1);
            using Item = std::pair<Score, int>;  // (distance, node)
            std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
            dist[static_cast<std::size_t>(source)] = 0;
            heap.emplace(0, source);
            while (!heap.empty()) {
                auto [d, u] = heap.top();
                heap.pop();
                if (d > dist[static_cast<std::size_t>(u)]) continue;
                for (int eid : graph_[static_cast<std::size_t>(u)]) {
                    const Edge& e = edges_[static_cast<std::size_t>(eid)];
                    if (e.capacity <= 0) continue;
                    Score nd = d + e.cost +
                               potential[static_cast<std::size_t>(u)] -
                               potential[static_cast<std::size_t>(e.to)];
                    if (nd < dist[static_cast<std::size_t>(e.to)]) {
                        dist[static_cast<std::size_t>(e.to)] = nd;
                        prev_edge[static_cast<std::size_t>(e.to)] = eid;
                        heap.emplace(nd, e.to);
                    }
                }
            }
            if (dist[static_cast<std::size_t>(sink)] >= kInf) break;
            for (std::size_t v = 0; v < node_count; ++v)
                if (dist[v] < kInf) potential[v] += dist[v];

            Score push = max_flow - flow;
            for (int v = sink; v != source;) {
                const Edge& e =
                    edges_[static_cast<std::size_t>(
                        prev_edge[static_cast<std::size_t>(v)])];
                push = std::min(push, e.capacity);
                v = edges_[static_cast<std::size_t>(
                               prev_edge[static_cast<std::size_t>(v)] ^ 1)]
                        .to;
            }
            for (int v = sink; v != source;) {
                int eid = prev_edge[static_cast<std::size_t>(v)];
                edges_[static_cast<std::size_t>(eid)].capacity -= push;
                edges_[static_cast<std::size_t>(eid ^ 1)].capacity += push;
                cost += push * edges_[static_cast<std::size_t>(eid)].cost;
                v = edges_[static_cast<std::size_t>(eid ^ 1)].to;
            }
            flow += push;
        }
        return {flow, cost};
    }

    Score flow_on(std::size_t edge_id) const {
        return edges_[edge_id ^ 1].capacity;
    }

private:
    struct Edge {
        int to;
        Score capacity;
        Score cost;
    };
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> graph_;
};

void check_committee(const Election& election, const Committee& committee) {
    if (committee.members().empty())
        throw ParameterError("empty committee");
    if (committee.members().back() >= election.m())
        throw ParameterError("committee member out of the election's range");
}

std::vector<Score> satisfaction_row(const RuleSpec& rule, const Vote& vote,
                                    const Committee& committee) {
    std::vector<Score> row;
    row.reserve(committee.members().size());
    for (int c : committee.members()) row.push_back(satisfaction(rule, vote, c));
    return row;
}

}  // namespace

Assignment cc_assign(const Election& election, const RuleSpec& rule,
                     const Committee& committee) {
    if (rule.family() != RuleFamily::chamberlin_courant)
        throw ParameterError("cc_assign requires a Chamberlin-Courant rule");
    check_committee(election, committee);

    Assignment out;
    out.rep.reserve(static_cast<std::size_t>(election.n()));
    for (const Vote& vote : election.votes()) {
        int best = committee.members().front();
        Score best_sat = satisfaction(rule, vote, best);
        for (std::size_t j = 1; j < committee.members().size(); ++j) {
            int c = committee.members()[j];
            Score s = satisfaction(rule, vote, c);
            if (s > best_sat) {  // ties stay with the lower index
                best = c;
                best_sat = s;
            }
        }
        out.rep.push_back(best);
        out.total_satisfaction += best_sat;
    }
    return out;
}

Assignment monroe_assign(const Election& election, const RuleSpec& rule,
                         const Committee& committee) {
    if (rule.family() != RuleFamily::monroe)
        throw ParameterError("monroe_assign requires a Monroe rule");
    check_committee(election, committee);

    const auto n = election.n();
    const int k = committee.k();
    if (n == 0) return Assignment{};

    // Voters with identical satisfaction vectors over the committee are
    // interchangeable; group them so flow size depends on the number of
    // distinct vectors, not on n. std::map keys give a canonical class order.
    std::map<std::vector<Score>, std::vector<std::int64_t>> classes;
    for (std::int64_t v = 0; v < n; ++v)
        classes[satisfaction_row(
                    rule, election.votes()[static_cast<std::size_t>(v)],
                    committee)]
            .push_back(v);

    const Score floor_cap = n / k;
    const Score remainder = n % k;
    const Score max_sat = rule.max_satisfaction();
    const int class_count = static_cast<int>(classes.size());

    // Nodes: source, classes, members, shared slack, sink. Saturating the
    // sink forces every member to floor(n/k) voters plus exactly n mod k
    // members taking one extra via the slack node.
    const int source = 0;
    const int first_class = 1;
    const int first_member = first_class + class_count;
    const int slack = first_member + k;
    const int sink = slack + 1;
    MinCostFlow flow(sink + 1);

    std::vector<std::vector<std::size_t>> class_member_edges(
        static_cast<std::size_t>(class_count));
    int class_index = 0;
    for (const auto& [sats, voters] : classes) {
        const auto count = static_cast<Score>(voters.size());
        flow.add_edge(source, first_class + class_index, count, 0);
        auto& edge_row =
            class_member_edges[static_cast<std::size_t>(class_index)];
        for (int j = 0; j < k; ++j)
            edge_row.push_back(flow.add_edge(
                first_class + class_index, first_member + j, count,
                max_sat - sats[static_cast<std::size_t>(j)]));
        ++class_index;
    }
    for (int j = 0; j < k; ++j) {
        if (floor_cap > 0)
            flow.add_edge(first_member + j, sink, floor_cap, 0);
        if (remainder > 0) flow.add_edge(first_member + j, slack, 1, 0);
    }
    if (remainder > 0) flow.add_edge(slack, sink, remainder, 0);

    auto [sent, cost] = flow.run(source, sink, n);
    if (sent != n)
        throw ScaleError("monroe transportation instance was infeasible");

    Assignment out;
    out.rep.assign(static_cast<std::size_t>(n), -1);
    out.total_satisfaction = n * max_sat - cost;

    // Deal each class's voters (ascending voter index) to members in
    // ascending member order, following the flow amounts.
    class_index = 0;
    for (const auto& [sats, voters] : classes) {
        std::size_t next = 0;
        for (int j = 0; j < k; ++j) {
            Score used = flow.flow_on(
                class_member_edges[static_cast<std::size_t>(class_index)]
                                  [static_cast<std::size_t>(j)]);
            for (Score i = 0; i < used; ++i)
                out.rep[static_cast<std::size_t>(voters[next++])] =
                    committee.members()[static_cast<std::size_t>(j)];
        }
        ++class_index;
    }
    return out;
}

Assignment brute_force_monroe_oracle(const Election& election,
                                     const RuleSpec& rule,
                                     const Committee& committee) {
    if (rule.family() != RuleFamily::monroe)
        throw ParameterError("oracle requires a Monroe rule");
    check_committee(election, committee);
    const auto n = election.n();
    const int k = committee.k();
    if (n > 10 || k > 3)
        throw ScaleError("brute-force oracle bounded to n <= 10, k <= 3");
    if (n == 0) return Assignment{};

    const Score ceil_cap = (n + k - 1) / k;
    const Score floor_cap = n / k;

    std::vector<std::vector<Score>> sat(static_cast<std::size_t>(n));
    for (std::int64_t v = 0; v < n; ++v)
        sat[static_cast<std::size_t>(v)] = satisfaction_row(
            rule, election.votes()[static_cast<std::size_t>(v)], committee);

    std::vector<int> choice(static_cast<std::size_t>(n), 0);
    std::vector<Score> load(static_cast<std::size_t>(k), 0);
    std::vector<int> best_choice;
    Score best_total = -1;

    // Depth-first over member choices per voter, pruning on the ceil cap;
    // a full assignment with every load <= ceil is automatically balanced
    // (loads sum to n and ceil = floor + 1).
    auto recurse = [&](auto&& self, std::int64_t v, Score total) -> void {
        if (v == n) {
            for (Score l : load)
                if (l < floor_cap) return;
            if (total > best_total) {
                best_total = total;
                best_choice.assign(choice.begin(), choice.end());
            }
            return;
        }
        for (int j = 0; j < k; ++j) {
            if (load[static_cast<std::size_t>(j)] == ceil_cap) continue;
            ++load[static_cast<std::size_t>(j)];
            choice[static_cast<std::size_t>(v)] = j;
            self(self, v + 1,
                 total + sat[static_cast<std::size_t>(v)]
                            [static_cast<std::size_t>(j)]);
            --load[static_cast<std::size_t>(j)];
        }
    };
    recurse(recurse, 0, 0);

    Assignment out;
    out.total_satisfaction = best_total;
    out.rep.reserve(static_cast<std::size_t>(n));
    for (std::int64_t v = 0; v < n; ++v)
        out.rep.push_back(
            committee.members()[static_cast<std::size_t>(
                best_choice[static_cast<std::size_t>(v)])]);
    return out;
}

}  // namespace votestream
