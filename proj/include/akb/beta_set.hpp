#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "akb/partition.hpp"

namespace akb {

// A beta-set is a set of integers containing every integer below some bound.
// Canonical form: `floor` is the smallest non-member (everything below it is
// a member) and `window` lists the finitely many members above `floor` in
// ascending order.  Equal sets have identical (floor, window) pairs.
class BetaSet {
public:
    BetaSet() = default;

    // Builds the set { z : z < low } union `members`, where `members` holds
    // every member >= low (sorted or not; duplicates rejected by assert).
    BetaSet(Int low, std::vector<Int> members);

    Int floor() const { return floor_; }
    const std::vector<Int>& window() const { return window_; }

    bool contains(Int z) const;

    // Members >= low as an explicit ascending list (low <= floor required).
    std::vector<Int> members_from(Int low) const;

    // Set with b removed and c inserted; throws BeadAbsent / PositionOccupied.
    BetaSet replaced(Int b, Int c) const;

    // Charge: result of pushing all beads maximally down, i.e. floor + |window|.
    Int charge() const { return floor_ + static_cast<Int>(window_.size()); }

    bool operator==(const BetaSet&) const = default;
    auto operator<=>(const BetaSet&) const = default;

private:
    Int floor_ = 0;
    std::vector<Int> window_;
};

// beta-numbers { lambda_i - i + s : i >= 1 } as a canonical BetaSet.
BetaSet beta_set(const Partition& lambda, Int charge);

// Inverse: part lengths are counts of gaps below each bead.
std::pair<Partition, Int> abacus_to_partition(const BetaSet& b);

// Floor division / modulo with sign convention of mathematics (mod >= 0 for e > 0).
inline Int floordiv(Int a, Int b) {
    Int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
inline Int floormod(Int a, Int b) { return a - floordiv(a, b) * b; }

} // namespace akb
