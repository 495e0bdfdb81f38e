#pragma once

// Replay of arbitrary move sequences and the structural checks made on
// full-tower solutions: legality, goal, length, the single midpoint move
// of the largest disk, and the time-reversal transform.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hanoi/puzzle.hpp"

namespace hanoi {

struct Failure {
    std::uint64_t index;
    std::string reason;
};

struct VerificationReport {
    bool legal = true;
    bool reached_goal = false;
    MoveCount length = 0;
    std::vector<std::uint64_t> largest_disk_move_indices;
    bool midpoint_bifurcation = false;
    // Why midpoint_bifurcation is false, when it is.
    std::string midpoint_note;
    std::optional<Failure> first_failure;
    // per_disk_moves[d-1]: how often disk d moved before replay stopped.
    std::vector<std::uint64_t> per_disk_moves;
};

// Single-pass replay. Illegal moves are recorded in the report, never thrown.
class Replayer {
public:
    // Throws InvalidConfiguration for k < 3 or n < 0.
    Replayer(int n, int k);

    // False once an illegal move has been seen; later moves are ignored.
    bool feed(const Move& m);
    VerificationReport finish() const;

    const PuzzleState& state() const noexcept { return state_; }

private:
    PuzzleState state_;
    std::vector<std::uint64_t> per_disk_;
    std::vector<std::uint64_t> largest_;
    std::uint64_t count_ = 0;
    std::optional<Failure> failure_;
};

template <class Range>
VerificationReport replay(int n, int k, Range&& moves)
{
    Replayer r(n, k);
    for (const Move& m : moves)
        if (!r.feed(m))
            break;
    return r.finish();
}

// Time reversal with peg relabeling: the result lists moves last to first,
// each Move(d, a, b) becoming Move(d, sigma(b), sigma(a)). sigma swaps pegs
// 0 and k-1 and, when swap_intermediates is set, mirrors pegs 1..k-2
// (peg i -> k-1-i); otherwise it fixes them.
std::vector<Move> reversal_transform(std::span<const Move> moves, int k, bool swap_intermediates = true);

}  // namespace hanoi
