#include "hanoi/oracle.hpp"

#include <limits>
#include <ostream>
#include <unordered_map>

namespace hanoi {

namespace {

constexpr std::uint64_t kBytesPerState = 2 * sizeof(std::uint16_t) + sizeof(std::uint64_t);

std::optional<std::uint64_t> count_states(int n, int k)
{
    std::uint64_t states = 1;
    for (int i = 0; i < n; ++i) {
        if (states > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(k))
            return std::nullopt;
        states *= static_cast<std::uint64_t>(k);
    }
    return states;
}

}  // namespace

std::uint64_t required_memory(int n, int k)
{
    auto states = count_states(n, k);
    if (!states || *states > std::numeric_limits<std::uint64_t>::max() / kBytesPerState)
        return std::numeric_limits<std::uint64_t>::max();
    return *states * kBytesPerState;
}

StateGraph::StateGraph(const StateGraphParams& params) : n_(params.n), k_(params.k), states_(0)
{
    if (k_ < 3)
        throw InvalidConfiguration("peg count must be at least 3, got " + std::to_string(k_));
    if (n_ < 0)
        throw InvalidConfiguration("disk count must be nonnegative, got " + std::to_string(n_));
    if (k_ > 64 || n_ > 64)
        throw InvalidConfiguration("the oracle supports at most 64 disks and 64 pegs");

    const std::uint64_t need = required_memory(n_, k_);
    if (need > params.memory_budget)
        throw ResourceLimit("state graph for " + std::to_string(n_) + " disks on " + std::to_string(k_) +
                                " pegs needs " + std::to_string(need) + " bytes, budget is " +
                                std::to_string(params.memory_budget),
                            need, params.memory_budget);

    states_ = *count_states(n_, k_);
    power_.resize(static_cast<std::size_t>(n_) + 1);
    power_[0] = 1;
    for (int i = 1; i <= n_; ++i)
        power_[static_cast<std::size_t>(i)] = power_[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(k_);
}

std::vector<std::uint16_t> StateGraph::distances_from(std::uint64_t source, std::vector<std::uint64_t>* layer_sizes) const
{
    std::vector<std::uint16_t> dist(states_, kUnreached);
    std::vector<std::uint64_t> frontier{source}, next;
    dist[source] = 0;
    if (layer_sizes)
        layer_sizes->clear();

    for (std::uint16_t depth = 0; !frontier.empty(); ++depth) {
        if (layer_sizes)
            layer_sizes->push_back(frontier.size());
        if (depth + 1 == kUnreached)
            throw ResourceLimit("state graph depth exceeds 16-bit distance storage", depth + 1, kUnreached - 1);
        next.clear();
        for (std::uint64_t s : frontier) {
            for_each_neighbor(s, [&](std::uint64_t t, const Move&) {
                if (dist[t] == kUnreached) {
                    dist[t] = static_cast<std::uint16_t>(depth + 1);
                    next.push_back(t);
                }
            });
        }
        frontier.swap(next);
    }
    return dist;
}

const std::vector<std::uint16_t>& StateGraph::from_start()
{
    if (dist_start_.empty())
        dist_start_ = distances_from(start_code(), &layers_);
    return dist_start_;
}

const std::vector<std::uint16_t>& StateGraph::from_goal()
{
    if (dist_goal_.empty())
        dist_goal_ = distances_from(goal_code());
    return dist_goal_;
}

unsigned StateGraph::distance()
{
    return from_start()[goal_code()];
}

std::vector<std::uint64_t> StateGraph::layer_sizes()
{
    from_start();
    return layers_;
}

MoveCount StateGraph::shortest_path_count(std::uint64_t from, std::uint64_t to) const
{
    if (from >= states_ || to >= states_)
        throw InvalidConfiguration("state code out of range");
    const auto dist_from = distances_from(from);
    const auto dist_to = distances_from(to);
    const unsigned total = dist_from[to];

    // Only states on some shortest path carry a count.
    std::unordered_map<std::uint64_t, MoveCount> layer{{from, MoveCount{1}}}, next;
    for (unsigned depth = 0; depth < total; ++depth) {
        next.clear();
        for (const auto& [s, paths] : layer) {
            for_each_neighbor(s, [&](std::uint64_t t, const Move&) {
                if (dist_from[t] == depth + 1 && dist_to[t] == total - depth - 1)
                    next[t] += paths;
            });
        }
        layer.swap(next);
    }
    return layer.at(to);
}

std::vector<Move> StateGraph::witness()
{
    const auto& to_goal = from_goal();
    std::vector<Move> out;
    std::uint64_t s = start_code();
    for (unsigned remaining = to_goal[s]; remaining > 0; --remaining) {
        std::optional<std::pair<std::uint64_t, Move>> best;
        for_each_neighbor(s, [&](std::uint64_t t, const Move& m) {
            if (to_goal[t] == remaining - 1 && (!best || t < best->first))
                best.emplace(t, m);
        });
        out.push_back(best->second);
        s = best->first;
    }
    return out;
}

MoveCount bfs_distance(const StateGraphParams& params)
{
    return StateGraph(params).distance();
}

MoveCount shortest_path_count(const StateGraphParams& params)
{
    return StateGraph(params).shortest_path_count();
}

std::vector<Move> extract_witness(const StateGraphParams& params)
{
    return StateGraph(params).witness();
}

void write_layers_csv(std::ostream& os, const std::vector<std::uint64_t>& layer_sizes)
{
    os << "layer,states,cumulative\n";
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < layer_sizes.size(); ++i) {
        total += layer_sizes[i];
        os << i << ',' << layer_sizes[i] << ',' << total << '\n';
    }
}

}  // namespace hanoi
