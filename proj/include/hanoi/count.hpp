#pragma once

// Minimum move counts for the k-peg tower: the 3-peg closed form, the
// two-block recursion, Frame's multi-split definition and the counts of
// the four-peg strategies S1, S2, S3.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hanoi/puzzle.hpp"

namespace hanoi {

enum class Strategy { S1, S2, S3, Optimal };

std::string to_string(Strategy s);
std::optional<Strategy> parse_strategy(const std::string& name);

// Block sizes for the n-1 smaller disks. blocks[0] is moved with all k pegs,
// blocks[1] with k-1 pegs, ..., blocks[k-3] with three pegs.
struct SplitPlan {
    int k = 3;
    std::vector<int> blocks;

    int disks() const;
    // Frame's constraint: every block nonempty and sizes non-increasing.
    bool frame_canonical() const;

    friend bool operator==(const SplitPlan&, const SplitPlan&) = default;
    friend auto operator<=>(const SplitPlan& a, const SplitPlan& b) { return a.blocks <=> b.blocks; }
};

std::ostream& operator<<(std::ostream& os, const SplitPlan& p);
std::string to_string(const SplitPlan& p);

// 2^n - 1.
MoveCount count_three_peg(int n);

struct FrameCount {
    MoveCount moves;
    // True when n < k, where Frame's partition set is empty and 2n-1 is used.
    bool small_tower_fallback = false;
};

// Memoizing count engine. Not internally synchronized: confine an instance
// to one thread, or give each thread its own.
class CountEngine {
public:
    // T(n,k) = min over 0 <= l < n of 2 T(l,k) + T(n-l,k-1), T(n,3) = 2^n - 1.
    const MoveCount& stewart(int n, int k);

    MoveCount frame(int n, int k) { return frame_detailed(n, k).moves; }
    FrameCount frame_detailed(int n, int k);

    // Every block plan reaching the minimum at the top level, in
    // lexicographic order. Throws DomainError for n = 0.
    std::vector<SplitPlan> optimal_splits(int n, int k);

    // The minimizer with the smallest first block, ties broken the same way
    // in each following block.
    SplitPlan canonical_split(int n, int k);
    int canonical_first_block(int n, int k);

    // 2 T(b_1,k) + 2 T(b_2,k-1) + ... + 2 T(b_{k-2},3) + 1.
    MoveCount plan_cost(const SplitPlan& plan);

    // Four-peg strategy counts.
    MoveCount strategy_count(int n, Strategy s);

private:
    void fill_stewart(int n, int k);
    const MoveCount& frame_memo(int n, int k);
    MoveCount frame_best(int remaining, int block, int max_part, int k);

    // stewart_[k][n]
    std::map<int, std::vector<MoveCount>> stewart_;
    std::map<std::pair<int, int>, MoveCount> frame_;
};

MoveCount count_stewart(int n, int k);
MoveCount count_frame(int n, int k);
std::vector<SplitPlan> optimal_splits(int n, int k);
MoveCount strategy_count(int n, Strategy s);

}  // namespace hanoi
