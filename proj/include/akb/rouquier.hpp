#pragma once

#include <utility>
#include <vector>

#include "akb/abacus.hpp"
#include "akb/blocks.hpp"

namespace akb {

// A charged partition is Rouquier when its e-weight fits every adjacent
// runner-charge gap: weight <= t_{i+1} - t_i + 1 for 0 <= i < e-1.
bool is_rouquier_partition(const AbacusConfig& x, int e);

// Relaxed form with headroom r: weight <= t_{i+1} - t_i + r.
bool is_r_rouquier_partition(const AbacusConfig& x, int e, int r);

// Every component Rouquier.
bool is_rouquier_multipartition(const MultiAbacus& m, int e);

// A block is Rouquier when every member of maximal hook weight is a Rouquier
// multipartition (equivalently, every member is; the sweep tests check the
// equivalence).
bool is_rouquier_block(const Block& b);

// Level-one block whose members satisfy the headroom-r inequality.  The
// inequality depends only on block invariants, so one member decides.
bool is_r_rouquier_block(const Block& b, int r);

// Adds m[i] beads to runner i: runner charges t_i become t_i + m[i] with the
// quotient unchanged.  The charge grows by sum(m).
AbacusConfig stretch(const AbacusConfig& x, const std::vector<Int>& m, int e);
MultiAbacus stretch(const MultiAbacus& x, const std::vector<Int>& m, int e);

// True when the fused image of the block lies in an r-Rouquier block, with
// r the member level.  All members must agree (they fuse into one block).
bool fused_block_r_rouquier(const Block& b);

// Stretch vector (0, M, 2M, ..., (e-1)M) with M large enough that stretching
// every member makes the fused image r-Rouquier; zero when it already is.
std::vector<Int> rouquier_stretch_vector(const Block& b);

// Charge shift: same partition, charge + 1.  On the runner decomposition
// this cycles runners one step with a bead landing on runner 0.
AbacusConfig shift_charge(const AbacusConfig& x);
MultiAbacus shift_charge(const MultiAbacus& m);

// Interchange of adjacent runners i and i+1 (quotient entries and charges
// swap).  For i = e-1 the wrap-around swap exchanges runners e-1 and 0 one
// row apart: quotient (q_{e-1}, q_1, ..., q_{e-2}, q_0), charges
// (t_{e-1}+1, t_1, ..., t_{e-2}, t_0-1); the total charge is unchanged and
// the map is an involution.
AbacusConfig swap_runners(const AbacusConfig& x, int i, int e);
MultiAbacus swap_runners(const MultiAbacus& m, int i, int e);

// Scopes condition for the runner swap at i on block b: every member and
// component has weight fitting the charge gap, w_k <= t_{i+1} - t_i for
// i < e-1 and w_k <= t_0 - t_{e-1} + 1 for the wrap-around swap.
bool scopes_move_valid(const Block& b, int i);

// One step of a block equivalence: a runner swap, a charge shift, or a
// stretch by a 0...01...1 vector (value 1 from some runner onward).
struct ChainStep {
    enum class Kind { Swap, Shift, Stretch };
    Kind kind = Kind::Shift;
    int runner = 0;             // Swap: the runner index i
    std::vector<Int> stretch;   // Stretch: the full e-entry vector

    bool operator==(const ChainStep&) const = default;
};

ChainStep swap_step(int i);
ChainStep shift_step();
// Stretch by one bead on every runner >= i.
ChainStep tail_stretch_step(int i, int e);

// A replayable equivalence between two blocks: the steps composed in order
// map the source onto the target, and `pairing` lists (source index, target
// index) under the canonical member orders.
struct EquivalenceChain {
    std::vector<ChainStep> steps;
    std::vector<std::pair<std::size_t, std::size_t>> pairing;

    bool operator==(const EquivalenceChain&) const = default;
};

MultiAbacus apply_step(const MultiAbacus& m, const ChainStep& s, int e);

// Checks that the step's validity condition holds at block b: swaps need the
// Scopes condition in one of the two orientations, stretches need the charge
// gaps t_y + 1 - t_x >= w_k across the stretch boundary.
bool step_valid(const Block& b, const ChainStep& s);

// Applies a validated step to every member; throws NotEligible if the
// validity condition fails.
Block apply_step(const Block& b, const ChainStep& s);

// Replays the chain from the source block, re-validating every step and the
// pairing; returns the target.
Block replay_chain(const Block& source, const EquivalenceChain& chain);

// Sorts the base tuple with runner swaps, then removes the remaining charge
// descents with tail stretches.  Requires a core block.
std::pair<EquivalenceChain, Block> reduce_to_staircase(const Block& b);

// For a core or Rouquier block: produces an equivalent block whose fused
// image lies in an r-Rouquier block (r the member level).  Core blocks go
// through the staircase reduction first; Rouquier blocks are stretched
// directly.
std::pair<EquivalenceChain, Block> rouquier_normalize(const Block& b);

} // namespace akb
