#pragma once

// Lazy move sequences for the classic 3-peg recursion, the optimal
// Frame-Stewart transfer on k pegs, and the four-peg strategies S1/S2/S3.
//
// Sequences are produced from an explicit task stack, so taking the first
// few moves of a 2^64 - 1 move solution costs O(n) memory and time.

#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <vector>

#include "hanoi/count.hpp"
#include "hanoi/puzzle.hpp"

namespace hanoi {

class MoveSequence {
public:
    int disks() const noexcept { return n_; }
    int pegs() const noexcept { return k_; }
    const MoveCount& declared_length() const noexcept { return length_; }

    // Next move, or nullopt once the sequence is exhausted.
    std::optional<Move> next();

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Move;
        using difference_type = std::ptrdiff_t;
        using pointer = const Move*;
        using reference = const Move&;

        iterator() = default;
        explicit iterator(MoveSequence* seq) : seq_(seq) { ++*this; }

        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }
        iterator& operator++()
        {
            current_ = seq_->next();
            if (!current_)
                seq_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.seq_ == b.seq_; }

    private:
        MoveSequence* seq_ = nullptr;
        std::optional<Move> current_;
    };

    // Single pass: iterating consumes the sequence.
    iterator begin() { return iterator(this); }
    iterator end() { return iterator(); }

    std::vector<Move> collect();

private:
    friend MoveSequence generate_three_peg(int, Peg, Peg, Peg);
    friend MoveSequence generate_optimal(int, int, const std::optional<SplitPlan>&);
    friend MoveSequence generate_strategy(int, Strategy);

    using PegSet = std::uint64_t;

    enum class Policy : std::uint8_t {
        Optimal,      // canonical Frame-Stewart split at every level
        SingleStack,  // park all smaller disks on one peg, using every free peg
    };

    struct Task {
        bool single;
        Policy policy;
        Disk lo, hi;  // disks lo..hi, all smaller disks parked elsewhere
        Peg from, to;
        PegSet usable;
    };

    MoveSequence(int n, int k, MoveCount length);

    void push_transfer(Disk lo, Disk hi, Peg from, Peg to, PegSet usable, Policy policy = Policy::Optimal);
    void push_single(Disk d, Peg from, Peg to);
    void expand(const Task& t);
    int first_block(int size, int pegs);

    int n_;
    int k_;
    MoveCount length_;
    std::vector<Task> stack_;
    // first_block_[pegs][size], built on first use.
    std::vector<std::vector<int>> first_block_;
};

// Transfer disks 1..n from src to dst using aux. Throws InvalidConfiguration
// unless the pegs are distinct and nonnegative.
MoveSequence generate_three_peg(int n, Peg src, Peg aux, Peg dst);

// Frame-Stewart transfer of n disks from peg 0 to peg k-1. Spare pegs are
// taken in ascending order; the top-level split is `plan` when given,
// otherwise the smallest-first-block minimizer.
MoveSequence generate_optimal(int n, int k, const std::optional<SplitPlan>& plan = std::nullopt);

// Four-peg strategies; Strategy::Optimal is generate_optimal(n, 4).
MoveSequence generate_strategy(int n, Strategy s);

}  // namespace hanoi
