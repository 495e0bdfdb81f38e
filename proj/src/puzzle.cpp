#include "hanoi/puzzle.hpp"

#include <limits>
#include <ostream>
#include <sstream>

namespace hanoi {

std::ostream& operator<<(std::ostream& os, const Move& m)
{
    return os << "Move(" << m.disk << ", " << m.from << ", " << m.to << ")";
}

PuzzleState::PuzzleState(int n, int k, std::vector<Peg> location)
    : k_(k), location_(std::move(location))
{
    if (k < 3)
        throw InvalidConfiguration("peg count must be at least 3, got " + std::to_string(k));
    if (n < 0)
        throw InvalidConfiguration("disk count must be nonnegative, got " + std::to_string(n));
    if (location_.size() != static_cast<std::size_t>(n))
        throw InvalidConfiguration("location map size does not match disk count");
    for (Peg p : location_)
        if (p < 0 || p >= k)
            throw InvalidConfiguration("peg index " + std::to_string(p) + " out of range");
}

std::optional<Disk> PuzzleState::top(Peg p) const
{
    for (std::size_t i = 0; i < location_.size(); ++i)
        if (location_[i] == p)
            return static_cast<Disk>(i + 1);
    return std::nullopt;
}

std::vector<Disk> PuzzleState::stack(Peg p) const
{
    std::vector<Disk> out;
    for (auto i = location_.size(); i-- > 0;)
        if (location_[i] == p)
            out.push_back(static_cast<Disk>(i + 1));
    return out;
}

std::uint64_t PuzzleState::encode() const
{
    std::uint64_t code = 0;
    for (auto i = location_.size(); i-- > 0;) {
        if (code > (std::numeric_limits<std::uint64_t>::max() - static_cast<std::uint64_t>(location_[i])) /
                       static_cast<std::uint64_t>(k_))
            throw InvalidConfiguration("state encoding does not fit in 64 bits");
        code = code * static_cast<std::uint64_t>(k_) + static_cast<std::uint64_t>(location_[i]);
    }
    return code;
}

PuzzleState PuzzleState::decode(int n, int k, std::uint64_t code)
{
    if (k < 3)
        throw InvalidConfiguration("peg count must be at least 3, got " + std::to_string(k));
    std::vector<Peg> loc(static_cast<std::size_t>(n < 0 ? 0 : n));
    for (auto& p : loc) {
        p = static_cast<Peg>(code % static_cast<std::uint64_t>(k));
        code /= static_cast<std::uint64_t>(k);
    }
    if (code != 0)
        throw InvalidConfiguration("state code out of range for the instance");
    return PuzzleState(n, k, std::move(loc));
}

PuzzleState initial_state(int n, int k)
{
    return PuzzleState(n, k, std::vector<Peg>(static_cast<std::size_t>(n < 0 ? 0 : n), 0));
}

PuzzleState goal_state(int n, int k)
{
    return PuzzleState(n, k, std::vector<Peg>(static_cast<std::size_t>(n < 0 ? 0 : n), k - 1));
}

bool is_goal(const PuzzleState& s)
{
    for (Peg p : s.locations())
        if (p != s.pegs() - 1)
            return false;
    return true;
}

std::optional<std::string> illegal_reason(const PuzzleState& s, const Move& m)
{
    std::ostringstream why;
    if (m.disk < 1 || m.disk > s.disks()) {
        why << "disk " << m.disk << " does not exist";
        return why.str();
    }
    if (m.from < 0 || m.from >= s.pegs() || m.to < 0 || m.to >= s.pegs()) {
        why << "peg out of range in " << m;
        return why.str();
    }
    if (m.from == m.to) {
        why << "disk " << m.disk << " moved from peg " << m.from << " onto itself";
        return why.str();
    }
    if (s.peg_of(m.disk) != m.from) {
        why << "disk " << m.disk << " is on peg " << s.peg_of(m.disk) << ", not peg " << m.from;
        return why.str();
    }
    // Smaller disks sharing a peg are necessarily stacked above.
    for (Disk d = 1; d < m.disk; ++d) {
        if (s.peg_of(d) == m.from) {
            why << "disk " << m.disk << " buried under disk " << d;
            return why.str();
        }
    }
    for (Disk d = 1; d < m.disk; ++d) {
        if (s.peg_of(d) == m.to) {
            why << "disk " << m.disk << " cannot be placed on smaller disk " << d << " on peg " << m.to;
            return why.str();
        }
    }
    return std::nullopt;
}

PuzzleState apply_move(const PuzzleState& s, const Move& m)
{
    if (auto why = illegal_reason(s, m))
        throw IllegalMove(*why);
    auto loc = s.locations();
    loc[static_cast<std::size_t>(m.disk - 1)] = m.to;
    return PuzzleState(s.disks(), s.pegs(), std::move(loc));
}

}  // namespace hanoi
