#include "hanoi/generator.hpp"

#include <algorithm>
#include <bit>

namespace hanoi {

namespace {

constexpr int kMaxPegs = 64;

std::uint64_t bit(Peg p) { return std::uint64_t{1} << p; }

std::uint64_t all_pegs(int k) { return k == 64 ? ~std::uint64_t{0} : bit(k) - 1; }

// Lowest peg in `usable` other than `a` and `b`.
Peg spare_peg(std::uint64_t usable, Peg a, Peg b)
{
    const std::uint64_t rest = usable & ~bit(a) & ~bit(b);
    return std::countr_zero(rest);
}

}  // namespace

MoveSequence::MoveSequence(int n, int k, MoveCount length) : n_(n), k_(k), length_(std::move(length)) {}

void MoveSequence::push_transfer(Disk lo, Disk hi, Peg from, Peg to, PegSet usable, Policy policy)
{
    if (lo <= hi)
        stack_.push_back(Task{false, policy, lo, hi, from, to, usable});
}

void MoveSequence::push_single(Disk d, Peg from, Peg to)
{
    stack_.push_back(Task{true, Policy::Optimal, d, d, from, to, 0});
}

int MoveSequence::first_block(int size, int pegs)
{
    if (first_block_.empty()) {
        CountEngine engine;
        first_block_.resize(static_cast<std::size_t>(k_) + 1);
        for (int p = 4; p <= k_; ++p) {
            auto& row = first_block_[static_cast<std::size_t>(p)];
            row.resize(static_cast<std::size_t>(n_) + 1, 0);
            for (int s = 1; s <= n_; ++s)
                row[static_cast<std::size_t>(s)] = engine.canonical_first_block(s, p);
        }
    }
    return first_block_[static_cast<std::size_t>(pegs)][static_cast<std::size_t>(size)];
}

// Pushes subtasks in reverse so they pop in execution order.
void MoveSequence::expand(const Task& t)
{
    const int size = t.hi - t.lo + 1;
    if (size == 1) {
        push_single(t.hi, t.from, t.to);
        return;
    }
    const int pegs = std::popcount(t.usable);
    const Peg spare = spare_peg(t.usable, t.from, t.to);

    if (pegs == 3 || t.policy == Policy::SingleStack) {
        push_transfer(t.lo, t.hi - 1, spare, t.to, t.usable, t.policy);
        push_single(t.hi, t.from, t.to);
        push_transfer(t.lo, t.hi - 1, t.from, spare, t.usable, t.policy);
        return;
    }

    // Park the first block with every peg, move the rest with the spare
    // frozen, then bring the block back on top.
    const int l = first_block(size, pegs);
    push_transfer(t.lo, t.lo + l - 1, spare, t.to, t.usable);
    push_transfer(t.lo + l, t.hi, t.from, t.to, t.usable & ~bit(spare));
    push_transfer(t.lo, t.lo + l - 1, t.from, spare, t.usable);
}

std::optional<Move> MoveSequence::next()
{
    while (!stack_.empty()) {
        Task t = stack_.back();
        stack_.pop_back();
        if (t.single)
            return Move{t.lo, t.from, t.to};
        expand(t);
    }
    return std::nullopt;
}

std::vector<Move> MoveSequence::collect()
{
    std::vector<Move> out;
    for (const Move& m : *this)
        out.push_back(m);
    return out;
}

MoveSequence generate_three_peg(int n, Peg src, Peg aux, Peg dst)
{
    if (n < 0)
        throw InvalidConfiguration("disk count must be nonnegative, got " + std::to_string(n));
    if (src == aux || src == dst || aux == dst)
        throw InvalidConfiguration("source, auxiliary and destination pegs must be distinct");
    if (std::min({src, aux, dst}) < 0 || std::max({src, aux, dst}) >= kMaxPegs)
        throw InvalidConfiguration("peg index out of range");
    const int k = std::max(3, std::max({src, aux, dst}) + 1);
    MoveSequence seq(n, k, count_three_peg(n));
    seq.push_transfer(1, n, src, dst, bit(src) | bit(aux) | bit(dst));
    return seq;
}

MoveSequence generate_optimal(int n, int k, const std::optional<SplitPlan>& plan)
{
    if (k < 3)
        throw InvalidConfiguration("peg count must be at least 3, got " + std::to_string(k));
    if (k > kMaxPegs)
        throw InvalidConfiguration("at most 64 pegs are supported");
    if (n < 0)
        throw InvalidConfiguration("disk count must be nonnegative, got " + std::to_string(n));

    CountEngine engine;
    if (!plan) {
        MoveSequence seq(n, k, engine.stewart(n, k));
        seq.push_transfer(1, n, 0, k - 1, all_pegs(k));
        return seq;
    }

    if (plan->k != k || plan->disks() != n)
        throw InvalidConfiguration("split plan " + to_string(*plan) + " does not match " + std::to_string(n) +
                                   " disks on " + std::to_string(k) + " pegs");
    MoveSequence seq(n, k, engine.plan_cost(*plan));

    struct Block {
        Disk lo, hi;
        Peg spare;
        std::uint64_t usable;
    };
    std::vector<Block> blocks;
    std::uint64_t usable = all_pegs(k);
    Disk lo = 1;
    for (std::size_t i = 0; i < plan->blocks.size(); ++i) {
        const Peg spare = static_cast<Peg>(i + 1);
        blocks.push_back({lo, lo + plan->blocks[i] - 1, spare, usable});
        lo += plan->blocks[i];
        usable &= ~bit(spare);
    }
    for (const auto& b : blocks)
        seq.push_transfer(b.lo, b.hi, b.spare, k - 1, b.usable);
    seq.push_single(n, 0, k - 1);
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        seq.push_transfer(it->lo, it->hi, 0, it->spare, it->usable);
    return seq;
}

MoveSequence generate_strategy(int n, Strategy s)
{
    if (n < 0)
        throw InvalidConfiguration("disk count must be nonnegative, got " + std::to_string(n));
    constexpr Peg source = 0, mediator = 1, reservoir = 2, destination = 3;

    switch (s) {
    case Strategy::S1: {
        // The Reservoir is never touched.
        MoveSequence seq(n, 4, count_three_peg(n));
        seq.push_transfer(1, n, source, destination, bit(source) | bit(mediator) | bit(destination));
        return seq;
    }
    case Strategy::S2: {
        MoveSequence seq(n, 4, count_three_peg(n));
        seq.push_transfer(1, n, source, destination, all_pegs(4), MoveSequence::Policy::SingleStack);
        return seq;
    }
    case Strategy::S3: {
        MoveSequence seq(n, 4, CountEngine{}.strategy_count(n, Strategy::S3));
        if (n == 0)
            return seq;
        // n = 2m+1: blocks of m and m. n = 2m: m on the Mediator, m-1 on the Reservoir.
        const int m = n / 2;
        const std::uint64_t via_mediator = bit(source) | bit(mediator) | bit(destination);
        const std::uint64_t via_reservoir = bit(source) | bit(reservoir) | bit(destination);
        seq.push_transfer(1, m, mediator, destination, via_mediator);
        seq.push_transfer(m + 1, n - 1, reservoir, destination, via_reservoir);
        seq.push_single(n, source, destination);
        seq.push_transfer(m + 1, n - 1, source, reservoir, via_reservoir);
        seq.push_transfer(1, m, source, mediator, via_mediator);
        return seq;
    }
    case Strategy::Optimal:
        return generate_optimal(n, 4);
    }
    throw std::logic_error("unknown strategy");
}

}  // namespace hanoi
