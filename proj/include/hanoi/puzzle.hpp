#pragma once

// Disks, pegs, states and the legal move rule of the k-peg Tower of Hanoi.
//
// Disks are numbered 1 (smallest) to n (largest). Pegs are numbered
// 0 (Source) to k-1 (Destination); for k = 4, peg 1 is the Mediator and
// peg 2 the Reservoir.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hanoi/errors.hpp"

namespace hanoi {

// Unbounded move counts; 2^n - 1 overflows every fixed-width type quickly.
using MoveCount = boost::multiprecision::cpp_int;

using Disk = int;
using Peg = int;

struct Move {
    Disk disk = 0;
    Peg from = 0;
    Peg to = 0;

    friend bool operator==(const Move&, const Move&) = default;
};

std::ostream& operator<<(std::ostream& os, const Move& m);

inline Move inverse(const Move& m) { return {m.disk, m.to, m.from}; }

// Which peg holds each disk. The order on a peg is forced (larger below
// smaller), so the disk -> peg map is a complete description.
class PuzzleState {
public:
    // Throws InvalidConfiguration if k < 3, n < 0, or a location is out of range.
    PuzzleState(int n, int k, std::vector<Peg> location);

    int disks() const noexcept { return static_cast<int>(location_.size()); }
    int pegs() const noexcept { return k_; }

    Peg peg_of(Disk d) const { return location_.at(static_cast<std::size_t>(d - 1)); }
    const std::vector<Peg>& locations() const noexcept { return location_; }

    // Smallest disk on the peg, or nullopt if the peg is empty.
    std::optional<Disk> top(Peg p) const;

    // Disks on a peg from bottom to top.
    std::vector<Disk> stack(Peg p) const;

    // Base-k integer: disk i contributes peg_of(i) * k^(i-1).
    std::uint64_t encode() const;
    static PuzzleState decode(int n, int k, std::uint64_t code);

    friend bool operator==(const PuzzleState&, const PuzzleState&) = default;

private:
    int k_;
    std::vector<Peg> location_;
};

// Every disk on peg 0. Throws InvalidConfiguration for k < 3 or n < 0.
PuzzleState initial_state(int n, int k);

// Every disk on peg k-1.
PuzzleState goal_state(int n, int k);

bool is_goal(const PuzzleState& s);

// Why `m` is illegal in `s`, or nullopt if it is legal.
std::optional<std::string> illegal_reason(const PuzzleState& s, const Move& m);

// Successor state. Throws IllegalMove; `s` is never modified.
PuzzleState apply_move(const PuzzleState& s, const Move& m);

}  // namespace hanoi
