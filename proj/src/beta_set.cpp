#include "akb/beta_set.hpp"

#include <algorithm>
#include <cassert>

#include "akb/error.hpp"

namespace akb {

BetaSet::BetaSet(Int low, std::vector<Int> members) {
    std::sort(members.begin(), members.end());
    assert(std::adjacent_find(members.begin(), members.end()) == members.end());
    assert(members.empty() || members.front() >= low);
    // Advance past the packed run starting at `low`: the canonical floor is
    // the first gap.
    Int z = low;
    std::size_t i = 0;
    while (i < members.size() && members[i] == z) {
        ++z;
        ++i;
    }
    floor_ = z;
    window_.assign(members.begin() + static_cast<std::ptrdiff_t>(i), members.end());
}

bool BetaSet::contains(Int z) const {
    if (z < floor_) return true;
    return std::binary_search(window_.begin(), window_.end(), z);
}

std::vector<Int> BetaSet::members_from(Int low) const {
    assert(low <= floor_);
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(floor_ - low) + window_.size());
    for (Int z = low; z < floor_; ++z) out.push_back(z);
    out.insert(out.end(), window_.begin(), window_.end());
    return out;
}

BetaSet BetaSet::replaced(Int b, Int c) const {
    if (!contains(b)) throw BeadAbsent("no bead at position " + std::to_string(b));
    if (contains(c)) throw PositionOccupied("position " + std::to_string(c) + " already occupied");
    Int low = std::min(std::min(b, c), floor_);
    std::vector<Int> members = members_from(low);
    members.erase(std::find(members.begin(), members.end(), b));
    members.push_back(c);
    return BetaSet(low, std::move(members));
}

BetaSet beta_set(const Partition& lambda, Int charge) {
    // Rows beyond the last part contribute the full tail below charge - length.
    Int l = static_cast<Int>(lambda.length());
    std::vector<Int> members;
    members.reserve(lambda.length());
    for (std::size_t i = 0; i < lambda.length(); ++i)
        members.push_back(lambda.part(i) - static_cast<Int>(i) - 1 + charge);
    return BetaSet(charge - l, std::move(members));
}

std::pair<Partition, Int> abacus_to_partition(const BetaSet& b) {
    const std::vector<Int>& w = b.window();
    std::vector<Int> parts;
    parts.reserve(w.size());
    // Part = number of gaps below the bead; beads taken largest first.
    for (std::size_t j = w.size(); j-- > 0;)
        parts.push_back(w[j] - b.floor() - static_cast<Int>(j));
    return {Partition(std::move(parts)), b.charge()};
}

} // namespace akb
