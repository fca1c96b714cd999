#pragma once

#include <vector>

#include "akb/abacus.hpp"
#include "akb/residue.hpp"

namespace akb {

// A block: every multipartition of n with the given charge vector and
// residue multiset.  Members are kept sorted so serialization and pairings
// are deterministic.
struct Block {
    int e = 0;
    std::vector<Int> charges;
    ResidueMultiset residues;
    std::vector<MultiAbacus> members;

    Int n() const { return residues.total(); }
    std::size_t size() const { return members.size(); }

    bool operator==(const Block&) const = default;
};

// One-step neighbors: move a bead down by e in one component and up by e in
// another (components may coincide).  Never returns the input itself.
std::vector<MultiAbacus> hook_transfer_neighbors(const MultiAbacus& m, int e);

// One-step neighbors: add an h-rim hook in one component and remove an h-rim
// hook in another (components may coincide), at bead positions congruent
// mod e so the residue content is unchanged.
std::vector<MultiAbacus> hook_exchange_neighbors(const MultiAbacus& m, int e);

// Union of both neighbor relations, deduplicated.
std::vector<MultiAbacus> neighbors(const MultiAbacus& m, int e);

// Closure of the seed under both moves; equals the seed's block.
Block generate_block(const MultiAbacus& seed, int e);

inline constexpr Int kDefaultEnumerationLimit = 5'000'000;

// Number of level-r multipartitions of n; the oracle's enumeration size.
Int multipartition_count(Int n, std::size_t level);

// All level-r multipartitions of n with the given charges attached.
std::vector<MultiAbacus> multipartitions_of(Int n, const std::vector<Int>& charges);

// Independent block computation: enumerate every multipartition of n at the
// given charges and keep those matching the target residue multiset.
// Throws ExplosionGuard if the enumeration would exceed `limit` candidates.
Block block_oracle(Int n, const std::vector<Int>& charges, int e,
                   const ResidueMultiset& target, Int limit = kDefaultEnumerationLimit);

// Oracle seeded by a configuration: target = the seed's residue multiset.
Block block_oracle(const MultiAbacus& seed, int e, Int limit = kDefaultEnumerationLimit);

// Sum of component e-weights.
Int hook_weight(const MultiAbacus& m, int e);

// Maximal hook weight over the block's members.
Int block_hook_weight(const Block& b);

// Members attaining the maximal hook weight.
std::vector<MultiAbacus> max_hook_members(const Block& b);

// A block is a core block when no member has a removable e-rim hook in any
// component, i.e. the maximal hook weight is zero.
bool is_core_block(const Block& b);

// Runner charges per component: row k lists the e runner charges of
// component k.  The columnwise sums are constant across a block.
std::vector<std::vector<Int>> runner_charge_matrix(const MultiAbacus& m, int e);

// For a core block, runner charges have the form t_i^k = b_i + delta with
// delta in {0,1}; returns (b_i)_i and throws NotACoreBlock if the block is
// not core or the spread check fails.
std::vector<Int> base_tuple(const Block& b);

// Core block whose members all have weakly increasing runner charges in
// every component.
bool is_staircase_block(const Block& b);

} // namespace akb
