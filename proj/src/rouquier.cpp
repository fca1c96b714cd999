#include "akb/rouquier.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>

#include "akb/error.hpp"
#include "akb/uglov.hpp"

namespace akb {

bool is_rouquier_partition(const AbacusConfig& x, int e) {
    return is_r_rouquier_partition(x, e, 1);
}

bool is_r_rouquier_partition(const AbacusConfig& x, int e, int r) {
    RunnerDecomposition d = runner_decomposition(x, e);
    Int w = d.weight();
    for (std::size_t i = 0; i + 1 < d.charges.size(); ++i)
        if (w > d.charges[i + 1] - d.charges[i] + r) return false;
    return true;
}

bool is_rouquier_multipartition(const MultiAbacus& m, int e) {
    for (const auto& c : m.components)
        if (!is_rouquier_partition(c, e)) return false;
    return true;
}

bool is_rouquier_block(const Block& b) {
    for (const auto& m : max_hook_members(b))
        if (!is_rouquier_multipartition(m, b.e)) return false;
    return true;
}

bool is_r_rouquier_block(const Block& b, int r) {
    if (b.members.empty()) throw std::invalid_argument("block has no members");
    if (b.members.front().level() != 1)
        throw std::invalid_argument("headroom check applies to level-one blocks");
    return is_r_rouquier_partition(b.members.front().components[0], b.e, r);
}

AbacusConfig stretch(const AbacusConfig& x, const std::vector<Int>& m, int e) {
    RunnerDecomposition d = runner_decomposition(x, e);
    if (m.size() != d.charges.size())
        throw std::invalid_argument("stretch vector must have one entry per runner");
    for (std::size_t i = 0; i < m.size(); ++i) d.charges[i] += m[i];
    return from_runner_decomposition(d, e);
}

MultiAbacus stretch(const MultiAbacus& x, const std::vector<Int>& m, int e) {
    MultiAbacus out;
    out.components.reserve(x.level());
    for (const auto& c : x.components) out.components.push_back(stretch(c, m, e));
    return out;
}

bool fused_block_r_rouquier(const Block& b) {
    if (b.members.empty()) throw std::invalid_argument("block has no members");
    int r = static_cast<int>(b.members.front().level());
    bool result = is_r_rouquier_partition(fuse(b.members.front(), b.e), b.e, r);
    for (std::size_t j = 1; j < b.members.size(); ++j)
        if (is_r_rouquier_partition(fuse(b.members[j], b.e), b.e, r) != result)
            throw std::logic_error("fused images of one block disagree on the headroom check");
    return result;
}

std::vector<Int> rouquier_stretch_vector(const Block& b) {
    std::size_t e = static_cast<std::size_t>(b.e);
    std::vector<Int> m(e, 0);
    if (fused_block_r_rouquier(b)) return m;
    int r = static_cast<int>(b.members.front().level());

    RunnerDecomposition d = runner_decomposition(fuse(b.members.front(), b.e), b.e);
    Int drop = 0;  // largest adjacent charge descent of the fused image
    for (std::size_t i = 0; i + 1 < d.charges.size(); ++i)
        drop = std::max(drop, d.charges[i] - d.charges[i + 1]);
    Int need = drop + d.weight();
    Int scalar = std::max<Int>(0, floordiv(need + r - 1, r));
    for (std::size_t i = 0; i < e; ++i) m[i] = static_cast<Int>(i) * scalar;

    for (const auto& member : b.members)
        if (!is_r_rouquier_partition(fuse(stretch(member, m, b.e), b.e), b.e, r))
            throw std::logic_error("stretch vector failed to reach the headroom bound");
    return m;
}

AbacusConfig shift_charge(const AbacusConfig& x) { return {x.partition, x.charge + 1}; }

MultiAbacus shift_charge(const MultiAbacus& m) {
    MultiAbacus out = m;
    for (auto& c : out.components) ++c.charge;
    return out;
}

AbacusConfig swap_runners(const AbacusConfig& x, int i, int e) {
    if (i < 0 || i >= e) throw std::invalid_argument("runner index out of range");
    RunnerDecomposition d = runner_decomposition(x, e);
    if (i + 1 < e) {
        std::swap(d.quotient[i], d.quotient[i + 1]);
        std::swap(d.charges[i], d.charges[i + 1]);
    } else {
        // Wrap-around: runners e-1 and 0 trade places one row apart, which
        // costs one bead on runner 0 and returns it on runner e-1.
        std::swap(d.quotient[0], d.quotient[e - 1]);
        Int t0 = d.charges[0], te = d.charges[e - 1];
        d.charges[0] = te + 1;
        d.charges[e - 1] = t0 - 1;
    }
    return from_runner_decomposition(d, e);
}

MultiAbacus swap_runners(const MultiAbacus& m, int i, int e) {
    MultiAbacus out;
    out.components.reserve(m.level());
    for (const auto& c : m.components) out.components.push_back(swap_runners(c, i, e));
    return out;
}

bool scopes_move_valid(const Block& b, int i) {
    if (i < 0 || i >= b.e) throw std::invalid_argument("runner index out of range");
    for (const auto& m : b.members)
        for (const auto& c : m.components) {
            RunnerDecomposition d = runner_decomposition(c, b.e);
            Int w = d.weight();
            Int gap = (i + 1 < b.e) ? d.charges[i + 1] - d.charges[i]
                                    : d.charges[0] - d.charges[b.e - 1] + 1;
            if (w > gap) return false;
        }
    return true;
}

ChainStep swap_step(int i) {
    ChainStep s;
    s.kind = ChainStep::Kind::Swap;
    s.runner = i;
    return s;
}

ChainStep shift_step() {
    ChainStep s;
    s.kind = ChainStep::Kind::Shift;
    return s;
}

ChainStep tail_stretch_step(int i, int e) {
    ChainStep s;
    s.kind = ChainStep::Kind::Stretch;
    s.stretch.assign(static_cast<std::size_t>(e), 0);
    for (int j = i; j < e; ++j) s.stretch[static_cast<std::size_t>(j)] = 1;
    return s;
}

MultiAbacus apply_step(const MultiAbacus& m, const ChainStep& s, int e) {
    switch (s.kind) {
        case ChainStep::Kind::Swap: return swap_runners(m, s.runner, e);
        case ChainStep::Kind::Shift: return shift_charge(m);
        case ChainStep::Kind::Stretch: return stretch(m, s.stretch, e);
    }
    throw std::logic_error("unknown step kind");
}

namespace {

// Index of the first 1 in a 0...01...1 stretch vector, or -1 if the vector
// has any other shape.
int tail_stretch_start(const std::vector<Int>& m) {
    std::size_t i = 0;
    while (i < m.size() && m[i] == 0) ++i;
    if (i == m.size()) return -1;  // all zero: not a move
    for (std::size_t j = i; j < m.size(); ++j)
        if (m[j] != 1) return -1;
    return static_cast<int>(i);
}

Block map_block(const Block& b, const ChainStep& s) {
    Block out;
    out.e = b.e;
    out.members.reserve(b.members.size());
    for (const auto& m : b.members) out.members.push_back(apply_step(m, s, b.e));
    std::sort(out.members.begin(), out.members.end());
    if (std::adjacent_find(out.members.begin(), out.members.end()) != out.members.end())
        throw std::logic_error("step mapped two members to the same configuration");
    out.charges = out.members.front().charges();
    out.residues = residue_multiset(out.members.front(), b.e);
    return out;
}

} // namespace

bool step_valid(const Block& b, const ChainStep& s) {
    switch (s.kind) {
        case ChainStep::Kind::Shift:
            return true;
        case ChainStep::Kind::Swap: {
            if (s.runner < 0 || s.runner >= b.e) return false;
            if (scopes_move_valid(b, s.runner)) return true;
            // The swap is an involution; the condition may hold on the image
            // side instead.
            return scopes_move_valid(map_block(b, s), s.runner);
        }
        case ChainStep::Kind::Stretch: {
            if (s.stretch.size() != static_cast<std::size_t>(b.e)) return false;
            int i = tail_stretch_start(s.stretch);
            if (i < 0) return false;
            // Every charge gap across the stretch boundary must fit the
            // component weight: t_y + 1 - t_x >= w_k for x < i <= y.
            for (const auto& m : b.members)
                for (const auto& c : m.components) {
                    RunnerDecomposition d = runner_decomposition(c, b.e);
                    Int w = d.weight();
                    for (int x = 0; x < i; ++x)
                        for (int y = i; y < b.e; ++y)
                            if (d.charges[static_cast<std::size_t>(y)] + 1 -
                                    d.charges[static_cast<std::size_t>(x)] < w)
                                return false;
                }
            return true;
        }
    }
    return false;
}

Block apply_step(const Block& b, const ChainStep& s) {
    if (!step_valid(b, s)) throw NotEligible("equivalence step fails its validity condition");
    return map_block(b, s);
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> trace_pairing(const Block& source,
                                                               const EquivalenceChain& chain,
                                                               const Block& target) {
    std::unordered_map<MultiAbacus, std::size_t> index;
    for (std::size_t j = 0; j < target.members.size(); ++j) index.emplace(target.members[j], j);
    std::vector<std::pair<std::size_t, std::size_t>> pairing;
    pairing.reserve(source.members.size());
    for (std::size_t j = 0; j < source.members.size(); ++j) {
        MultiAbacus cur = source.members[j];
        for (const auto& s : chain.steps) cur = apply_step(cur, s, source.e);
        auto it = index.find(cur);
        if (it == index.end()) throw std::logic_error("chained member missing from target block");
        pairing.emplace_back(j, it->second);
    }
    return pairing;
}

} // namespace

Block replay_chain(const Block& source, const EquivalenceChain& chain) {
    Block cur = source;
    for (const auto& s : chain.steps) cur = apply_step(cur, s);
    if (!chain.pairing.empty()) {
        auto expected = trace_pairing(source, chain, cur);
        if (chain.pairing != expected)
            throw std::invalid_argument("chain pairing does not match the replayed steps");
    }
    return cur;
}

std::pair<EquivalenceChain, Block> reduce_to_staircase(const Block& b) {
    if (!is_core_block(b)) throw NotACoreBlock("staircase reduction requires a core block");

    EquivalenceChain chain;
    Block cur = b;

    // Alternate two kinds of progress until every member's every component
    // has weakly increasing charges.  A swap straightens a runner pair that
    // descends weakly across the whole block; a stretch on runners >= i
    // raises t_i by one for every member, clearing the descents at i.  Each
    // swap strictly lowers the total inversion count and a stretch never
    // raises it while strictly lowering the descent total, so this ends.
    for (;;) {
        std::vector<std::vector<std::vector<Int>>> mats;
        mats.reserve(cur.members.size());
        for (const auto& m : cur.members) mats.push_back(runner_charge_matrix(m, cur.e));

        int swap_at = -1;
        for (int i = 0; i + 1 < cur.e && swap_at < 0; ++i) {
            bool all_ge = true, some_gt = false;
            for (const auto& mat : mats)
                for (const auto& row : mat) {
                    std::size_t j = static_cast<std::size_t>(i);
                    if (row[j] < row[j + 1]) all_ge = false;
                    if (row[j] > row[j + 1]) some_gt = true;
                }
            if (all_ge && some_gt) swap_at = i;
        }
        if (swap_at >= 0) {
            ChainStep s = swap_step(swap_at);
            cur = apply_step(cur, s);
            chain.steps.push_back(std::move(s));
            continue;
        }

        bool any_descent = false, advanced = false;
        for (int i = 1; i < cur.e && !advanced; ++i) {
            bool strict = false;
            for (const auto& mat : mats)
                for (const auto& row : mat)
                    strict = strict || row[static_cast<std::size_t>(i) - 1] >
                                           row[static_cast<std::size_t>(i)];
            if (!strict) continue;
            any_descent = true;
            ChainStep s = tail_stretch_step(i, cur.e);
            if (!step_valid(cur, s)) continue;
            cur = apply_step(cur, s);
            chain.steps.push_back(std::move(s));
            advanced = true;
        }
        if (!any_descent) break;
        if (!advanced) throw std::logic_error("staircase reduction is stuck");
    }

    assert(is_staircase_block(cur));
    chain.pairing = trace_pairing(b, chain, cur);
    return {std::move(chain), std::move(cur)};
}

std::pair<EquivalenceChain, Block> rouquier_normalize(const Block& b) {
    EquivalenceChain chain;
    Block cur = b;
    if (is_rouquier_block(b) && fused_block_r_rouquier(b)) {
        // Both target conditions already hold; the identity chain suffices.
        chain.pairing = trace_pairing(b, chain, cur);
        return {std::move(chain), std::move(cur)};
    }
    if (is_core_block(b)) {
        std::tie(chain, cur) = reduce_to_staircase(b);
    } else if (!is_rouquier_block(b)) {
        throw NotEligible("normalization applies to core or Rouquier blocks only");
    }

    // Stretch rounds raise the charge gaps until the fused image clears the
    // headroom bound; the stretch-vector scalar bounds the round count.
    std::vector<Int> target_vector = rouquier_stretch_vector(cur);
    Int max_rounds = target_vector.size() > 1 ? target_vector[1] : 0;
    Int rounds = 0;
    while (!fused_block_r_rouquier(cur)) {
        if (rounds > max_rounds)
            throw std::logic_error("stretch rounds exceeded the computed bound");
        for (int i = 1; i < cur.e; ++i) {
            ChainStep s = tail_stretch_step(i, cur.e);
            cur = apply_step(cur, s);
            chain.steps.push_back(std::move(s));
        }
        ++rounds;
    }

    chain.pairing = trace_pairing(b, chain, cur);
    return {std::move(chain), std::move(cur)};
}

} // namespace akb
