#pragma once

// Exhaustive breadth-first search over all k^n disk -> peg assignments.
// Used as ground truth for the recursive counts at desk scale.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hanoi/puzzle.hpp"

namespace hanoi {

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{2} << 30;  // 2 GiB

struct StateGraphParams {
    int n = 0;
    int k = 4;
    std::uint64_t memory_budget = kDefaultMemoryBudget;
};

// Bytes needed for two distance arrays plus a worst-case frontier; saturates
// at UINT64_MAX when k^n itself does not fit.
std::uint64_t required_memory(int n, int k);

class StateGraph {
public:
    static constexpr std::uint16_t kUnreached = 0xFFFF;

    // Throws InvalidConfiguration for bad (n, k) and ResourceLimit when the
    // graph does not fit params.memory_budget.
    explicit StateGraph(const StateGraphParams& params);

    int disks() const noexcept { return n_; }
    int pegs() const noexcept { return k_; }
    std::uint64_t state_count() const noexcept { return states_; }
    std::uint64_t start_code() const noexcept { return 0; }
    std::uint64_t goal_code() const noexcept { return states_ - 1; }

    // Calls f(successor_code, move) for every legal move out of `code`.
    template <class F>
    void for_each_neighbor(std::uint64_t code, F&& f) const;

    // BFS distances from `source` to every state; optionally the size of each layer.
    std::vector<std::uint16_t> distances_from(std::uint64_t source,
                                              std::vector<std::uint64_t>* layer_sizes = nullptr) const;

    // Initial to goal.
    unsigned distance();
    std::vector<std::uint64_t> layer_sizes();

    // Number of distinct shortest move sequences, by layered path counting.
    MoveCount shortest_path_count() { return shortest_path_count(start_code(), goal_code()); }
    MoveCount shortest_path_count(std::uint64_t from, std::uint64_t to) const;

    // One shortest solution: from each state, step to the lowest-coded
    // successor that is one move closer to the goal.
    std::vector<Move> witness();

private:
    const std::vector<std::uint16_t>& from_start();
    const std::vector<std::uint16_t>& from_goal();

    int n_;
    int k_;
    std::uint64_t states_;
    std::vector<std::uint64_t> power_;  // power_[i] = k^i
    std::vector<std::uint16_t> dist_start_;
    std::vector<std::uint16_t> dist_goal_;
    std::vector<std::uint64_t> layers_;
};

template <class F>
void StateGraph::for_each_neighbor(std::uint64_t code, F&& f) const
{
    // top[p]: smallest disk on peg p, 0 when empty.
    Disk top[64] = {};
    std::uint64_t rest = code;
    Peg loc[64];
    for (int i = 0; i < n_; ++i) {
        loc[i] = static_cast<Peg>(rest % static_cast<std::uint64_t>(k_));
        rest /= static_cast<std::uint64_t>(k_);
    }
    for (int i = n_; i-- > 0;)
        top[loc[i]] = i + 1;
    for (Peg from = 0; from < k_; ++from) {
        const Disk d = top[from];
        if (d == 0)
            continue;
        const std::uint64_t unit = power_[static_cast<std::size_t>(d - 1)];
        const std::uint64_t base = code - unit * static_cast<std::uint64_t>(from);
        for (Peg to = 0; to < k_; ++to) {
            if (to == from || (top[to] != 0 && top[to] < d))
                continue;
            f(base + unit * static_cast<std::uint64_t>(to), Move{d, from, to});
        }
    }
}

MoveCount bfs_distance(const StateGraphParams& params);
MoveCount shortest_path_count(const StateGraphParams& params);
std::vector<Move> extract_witness(const StateGraphParams& params);

// CSV with header `layer,states,cumulative`.
void write_layers_csv(std::ostream& os, const std::vector<std::uint64_t>& layer_sizes);

}  // namespace hanoi
