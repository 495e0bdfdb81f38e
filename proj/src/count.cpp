#include "hanoi/count.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace hanoi {

namespace {

void check_instance(int n, int k)
{
    if (k < 3)
        throw InvalidConfiguration("peg count must be at least 3, got " + std::to_string(k));
    if (n < 0)
        throw InvalidConfiguration("disk count must be nonnegative, got " + std::to_string(n));
}

MoveCount pow2_minus_one(int n)
{
    MoveCount v = 1;
    v <<= n;
    return v - 1;
}

}  // namespace

std::string to_string(Strategy s)
{
    switch (s) {
    case Strategy::S1: return "s1";
    case Strategy::S2: return "s2";
    case Strategy::S3: return "s3";
    case Strategy::Optimal: return "optimal";
    }
    return "?";
}

std::optional<Strategy> parse_strategy(const std::string& name)
{
    if (name == "s1" || name == "S1") return Strategy::S1;
    if (name == "s2" || name == "S2") return Strategy::S2;
    if (name == "s3" || name == "S3") return Strategy::S3;
    if (name == "optimal" || name == "OPTIMAL") return Strategy::Optimal;
    return std::nullopt;
}

int SplitPlan::disks() const
{
    return std::accumulate(blocks.begin(), blocks.end(), 0) + 1;
}

bool SplitPlan::frame_canonical() const
{
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (blocks[i] < 1)
            return false;
        if (i > 0 && blocks[i] > blocks[i - 1])
            return false;
    }
    return true;
}

std::ostream& operator<<(std::ostream& os, const SplitPlan& p)
{
    os << '(';
    for (std::size_t i = 0; i < p.blocks.size(); ++i)
        os << (i ? "," : "") << p.blocks[i];
    return os << ')';
}

std::string to_string(const SplitPlan& p)
{
    std::ostringstream os;
    os << p;
    return os.str();
}

MoveCount count_three_peg(int n)
{
    if (n < 0)
        throw InvalidConfiguration("disk count must be nonnegative, got " + std::to_string(n));
    return pow2_minus_one(n);
}

void CountEngine::fill_stewart(int n, int k)
{
    auto& row = stewart_[k];
    if (static_cast<int>(row.size()) > n)
        return;
    if (k == 3) {
        for (int i = static_cast<int>(row.size()); i <= n; ++i)
            row.push_back(pow2_minus_one(i));
        return;
    }
    fill_stewart(n, k - 1);
    const auto& fewer = stewart_[k - 1];
    if (row.empty())
        row.emplace_back(0);
    for (int i = static_cast<int>(row.size()); i <= n; ++i) {
        MoveCount best = 2 * row[0] + fewer[static_cast<std::size_t>(i)];
        for (int l = 1; l < i; ++l) {
            MoveCount c = 2 * row[static_cast<std::size_t>(l)] + fewer[static_cast<std::size_t>(i - l)];
            if (c < best)
                best = std::move(c);
        }
        row.push_back(std::move(best));
    }
}

const MoveCount& CountEngine::stewart(int n, int k)
{
    check_instance(n, k);
    fill_stewart(n, k);
    return stewart_[k][static_cast<std::size_t>(n)];
}

int CountEngine::canonical_first_block(int n, int k)
{
    check_instance(n, k);
    if (n == 0)
        throw DomainError("an empty tower has no split");
    if (k == 3)
        return n - 1;
    const MoveCount& target = stewart(n, k);
    for (int l = 0; l < n; ++l)
        if (2 * stewart(l, k) + stewart(n - l, k - 1) == target)
            return l;
    throw std::logic_error("no minimizing split found");
}

SplitPlan CountEngine::canonical_split(int n, int k)
{
    SplitPlan plan{k, {}};
    for (int pegs = k, rest = n; pegs >= 3; --pegs) {
        int l = canonical_first_block(rest, pegs);
        plan.blocks.push_back(l);
        rest -= l;
    }
    return plan;
}

std::vector<SplitPlan> CountEngine::optimal_splits(int n, int k)
{
    check_instance(n, k);
    if (n == 0)
        throw DomainError("an empty tower has no split");
    if (k == 3)
        return {SplitPlan{3, {n - 1}}};

    std::vector<SplitPlan> out;
    const MoveCount target = stewart(n, k);
    for (int l = 0; l < n; ++l) {
        if (2 * stewart(l, k) + stewart(n - l, k - 1) != target)
            continue;
        for (auto& tail : optimal_splits(n - l, k - 1)) {
            SplitPlan p{k, {l}};
            p.blocks.insert(p.blocks.end(), tail.blocks.begin(), tail.blocks.end());
            out.push_back(std::move(p));
        }
    }
    return out;
}

MoveCount CountEngine::plan_cost(const SplitPlan& plan)
{
    if (plan.k < 3 || static_cast<int>(plan.blocks.size()) != plan.k - 2)
        throw InvalidConfiguration("split plan for " + std::to_string(plan.k) + " pegs must have " +
                                   std::to_string(plan.k - 2) + " blocks");
    MoveCount total = 1;
    for (std::size_t i = 0; i < plan.blocks.size(); ++i) {
        if (plan.blocks[i] < 0)
            throw InvalidConfiguration("negative block size in split plan");
        total += 2 * stewart(plan.blocks[i], plan.k - static_cast<int>(i));
    }
    return total;
}

FrameCount CountEngine::frame_detailed(int n, int k)
{
    check_instance(n, k);
    return {frame_memo(n, k), k > 3 && n > 0 && n < k};
}

const MoveCount& CountEngine::frame_memo(int n, int k)
{
    auto key = std::make_pair(n, k);
    if (auto it = frame_.find(key); it != frame_.end())
        return it->second;

    MoveCount v;
    if (k == 3)
        v = pow2_minus_one(n);
    else if (n == 0)
        v = 0;
    else if (n < k)
        v = 2 * n - 1;
    else
        v = frame_best(n - 1, 0, n - 1, k) + 1;
    return frame_.emplace(key, std::move(v)).first->second;
}

// Minimum of sum_{i >= block} 2 T(n_i, k - i) over non-increasing positive
// parts n_block..n_{k-3} summing to `remaining`, each at most `max_part`.
MoveCount CountEngine::frame_best(int remaining, int block, int max_part, int k)
{
    const int parts_left = k - 2 - block;
    if (parts_left == 1)
        return 2 * frame_memo(remaining, k - block);

    std::optional<MoveCount> best;
    // Each later part needs at least one disk and may not exceed this one.
    for (int part = std::min(max_part, remaining - (parts_left - 1)); part >= 1; --part) {
        if (part * parts_left < remaining)
            break;
        MoveCount c = 2 * frame_memo(part, k - block) + frame_best(remaining - part, block + 1, part, k);
        if (!best || c < *best)
            best = std::move(c);
    }
    return *best;
}

MoveCount CountEngine::strategy_count(int n, Strategy s)
{
    if (n < 0)
        throw InvalidConfiguration("disk count must be nonnegative, got " + std::to_string(n));
    switch (s) {
    case Strategy::S1:
    case Strategy::S2:
        return pow2_minus_one(n);
    case Strategy::S3: {
        if (n == 0)
            return 0;
        const int m = n / 2;
        if (n % 2 == 1)
            return 4 * pow2_minus_one(m) + 1;
        return 2 * (pow2_minus_one(m) + pow2_minus_one(m - 1)) + 1;
    }
    case Strategy::Optimal:
        return stewart(n, 4);
    }
    throw std::logic_error("unknown strategy");
}

MoveCount count_stewart(int n, int k) { return CountEngine{}.stewart(n, k); }
MoveCount count_frame(int n, int k) { return CountEngine{}.frame(n, k); }
std::vector<SplitPlan> optimal_splits(int n, int k) { return CountEngine{}.optimal_splits(n, k); }
MoveCount strategy_count(int n, Strategy s) { return CountEngine{}.strategy_count(n, s); }

}  // namespace hanoi
