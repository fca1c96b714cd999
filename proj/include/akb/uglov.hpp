#pragma once

#include <utility>
#include <vector>

#include "akb/abacus.hpp"
#include "akb/blocks.hpp"

namespace akb {

// Interleaves level k (1-based, 1 <= k <= r) into a single abacus: position
// x = m*e + i (0 <= i < e) of component k lands on row (m+1)*r - k of the
// same runner i.  Strictly increasing in x for fixed k, and the images of
// the r levels tile the integers.
Int interleave_position(Int x, int k, int r, int e);

// Inverse tiling: returns (k, x) with interleave_position(x, k, r, e) == y.
std::pair<int, Int> deinterleave_position(Int y, int r, int e);

// Merges the component beta-sets through interleave_position into one
// charged partition.  The resulting charge is the sum of component charges.
AbacusConfig fuse(const MultiAbacus& m, int e);

// Inverse of fuse at level r.
MultiAbacus split(const AbacusConfig& x, int r, int e);

// Runner decomposition of the fused configuration: a level-r multipartition
// becomes an e-tuple of charged partitions (compared under level-e versus
// level-r block equivalence, the two sides exchange roles).
RunnerDecomposition level_rank(const MultiAbacus& m, int e);

// Splits every member of a level-one block at level r and groups the images
// by block; each part is itself a full block.
std::vector<Block> phi_block_decomposition(const Block& b, int r);

} // namespace akb
