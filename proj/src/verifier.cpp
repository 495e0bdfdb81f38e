#include "hanoi/verifier.hpp"

namespace hanoi {

Replayer::Replayer(int n, int k)
    : state_(initial_state(n, k)), per_disk_(static_cast<std::size_t>(n), 0)
{
}

bool Replayer::feed(const Move& m)
{
    if (failure_)
        return false;
    if (auto why = illegal_reason(state_, m)) {
        failure_ = Failure{count_, *why};
        return false;
    }
    state_ = apply_move(state_, m);
    ++per_disk_[static_cast<std::size_t>(m.disk - 1)];
    if (m.disk == state_.disks())
        largest_.push_back(count_);
    ++count_;
    return true;
}

VerificationReport Replayer::finish() const
{
    VerificationReport r;
    r.legal = !failure_;
    r.first_failure = failure_;
    r.length = count_;
    r.largest_disk_move_indices = largest_;
    r.per_disk_moves = per_disk_;
    r.reached_goal = r.legal && is_goal(state_);

    if (!r.legal)
        r.midpoint_note = "sequence is illegal";
    else if (!r.reached_goal)
        r.midpoint_note = "sequence does not reach the goal";
    else if (state_.disks() == 0)
        r.midpoint_note = "no disks";
    else if (largest_.size() != 1)
        r.midpoint_note = "largest disk moved " + std::to_string(largest_.size()) + " times";
    else if (count_ % 2 == 0 || largest_.front() != (count_ - 1) / 2)
        r.midpoint_note = "largest disk moved at index " + std::to_string(largest_.front()) + " of " +
                          std::to_string(count_);
    else
        r.midpoint_bifurcation = true;
    return r;
}

std::vector<Move> reversal_transform(std::span<const Move> moves, int k, bool swap_intermediates)
{
    auto sigma = [&](Peg p) {
        if (p == 0) return k - 1;
        if (p == k - 1) return 0;
        return swap_intermediates ? k - 1 - p : p;
    };
    std::vector<Move> out;
    out.reserve(moves.size());
    for (auto it = moves.rbegin(); it != moves.rend(); ++it)
        out.push_back(Move{it->disk, sigma(it->to), sigma(it->from)});
    return out;
}

}  // namespace hanoi
