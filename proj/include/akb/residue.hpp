#pragma once

#include <compare>
#include <vector>

#include "akb/abacus.hpp"

namespace akb {

// Residues reduced to {0..e-1}; node (row x, col y) in component k has
// residue a_k + y - x mod e.
std::vector<Int> reduced_multicharge(const std::vector<Int>& charges, int e);

// Residue content as a count per residue class; total equals the size.
struct ResidueMultiset {
    std::vector<Int> counts;  // counts[i] = multiplicity of residue i

    Int total() const;

    bool operator==(const ResidueMultiset&) const = default;
    auto operator<=>(const ResidueMultiset&) const = default;
};

ResidueMultiset residue_multiset(const MultiAbacus& m, int e);

// Block membership test: equal charge vectors required (ChargeMismatch
// otherwise), then equality of residue multisets decides.
bool same_block(const MultiAbacus& x, const MultiAbacus& y, int e);

// Non-throwing variant: configurations with different charge vectors are
// simply in different blocks.
bool block_equivalent(const MultiAbacus& x, const MultiAbacus& y, int e);

} // namespace akb
