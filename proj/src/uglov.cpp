#include "akb/uglov.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

#include "akb/error.hpp"

namespace akb {

Int interleave_position(Int x, int k, int r, int e) {
    if (e < 1 || r < 1 || k < 1 || k > r) throw std::invalid_argument("bad interleaving indices");
    Int m = floordiv(x, e);
    Int i = x - m * e;
    return ((m + 1) * r - k) * e + i;
}

std::pair<int, Int> deinterleave_position(Int y, int r, int e) {
    if (e < 1 || r < 1) throw std::invalid_argument("bad interleaving indices");
    Int row = floordiv(y, e);
    Int i = y - row * e;
    int k = static_cast<int>(r - floormod(row, r));
    Int m = (row + k) / r - 1;
    return {k, m * e + i};
}

AbacusConfig fuse(const MultiAbacus& m, int e) {
    if (m.level() == 0) throw std::invalid_argument("fuse requires at least one component");
    int r = static_cast<int>(m.level());

    std::vector<BetaSet> beta;
    beta.reserve(m.level());
    for (const auto& c : m.components) beta.push_back(beta_set(c.partition, c.charge));

    // Below the lowest interleaved floor every position is a member.
    Int low = interleave_position(beta[0].floor(), 1, r, e);
    for (int k = 2; k <= r; ++k)
        low = std::min(low, interleave_position(beta[static_cast<std::size_t>(k - 1)].floor(), k, r, e));

    std::vector<Int> members;
    for (int k = 1; k <= r; ++k) {
        const BetaSet& b = beta[static_cast<std::size_t>(k - 1)];
        for (Int x : b.window()) members.push_back(interleave_position(x, k, r, e));
        // Tail beads whose images still lie at or above `low`.
        for (Int x = b.floor() - 1; interleave_position(x, k, r, e) >= low; --x)
            members.push_back(interleave_position(x, k, r, e));
    }

    auto [lambda, s] = abacus_to_partition(BetaSet(low, std::move(members)));
    Int charge_sum = 0;
    for (const auto& c : m.components) charge_sum += c.charge;
    assert(s == charge_sum);
    return {std::move(lambda), s};
}

MultiAbacus split(const AbacusConfig& x, int r, int e) {
    if (r < 1) throw std::invalid_argument("level must be >= 1");
    BetaSet b = beta_set(x.partition, x.charge);

    // Component k is full below the least position whose image reaches the
    // fused floor.
    std::vector<Int> low(static_cast<std::size_t>(r));
    for (int k = 1; k <= r; ++k) {
        Int best = 0;
        bool have = false;
        for (int i = 0; i < e; ++i) {
            // Least row R with R*e + i >= floor, then least m with
            // (m+1)*r - k >= R.
            Int R = floordiv(b.floor() - i + e - 1, e);
            Int m = floordiv(R + k + r - 1, r) - 1;
            Int pos = m * e + i;
            if (!have || pos < best) best = pos, have = true;
        }
        low[static_cast<std::size_t>(k - 1)] = best;
    }

    std::vector<std::vector<Int>> members(static_cast<std::size_t>(r));
    for (Int y : b.window()) {
        auto [k, pos] = deinterleave_position(y, r, e);
        assert(pos >= low[static_cast<std::size_t>(k - 1)]);
        members[static_cast<std::size_t>(k - 1)].push_back(pos);
    }

    MultiAbacus out;
    out.components.reserve(static_cast<std::size_t>(r));
    for (int k = 1; k <= r; ++k) {
        auto [lambda, s] = abacus_to_partition(
            BetaSet(low[static_cast<std::size_t>(k - 1)],
                    std::move(members[static_cast<std::size_t>(k - 1)])));
        out.components.push_back({std::move(lambda), s});
    }
    return out;
}

RunnerDecomposition level_rank(const MultiAbacus& m, int e) {
    return runner_decomposition(fuse(m, e), e);
}

std::vector<Block> phi_block_decomposition(const Block& b, int r) {
    for (const auto& m : b.members)
        if (m.level() != 1)
            throw std::invalid_argument("phi decomposition expects a level-one block");

    // Split images of one class can differ in charge vector (and size), so
    // group by the full block key rather than comparing pairwise.
    std::map<std::pair<std::vector<Int>, ResidueMultiset>, Block> parts;
    for (const auto& m : b.members) {
        MultiAbacus image = split(m.components[0], r, b.e);
        auto key = std::make_pair(image.charges(), residue_multiset(image, b.e));
        auto [it, fresh] = parts.try_emplace(key);
        if (fresh) {
            it->second.e = b.e;
            it->second.charges = key.first;
            it->second.residues = key.second;
        }
        it->second.members.push_back(std::move(image));
    }

    std::vector<Block> out;
    out.reserve(parts.size());
    for (auto& [key, part] : parts) {
        std::sort(part.members.begin(), part.members.end());
        out.push_back(std::move(part));
    }
    return out;
}

} // namespace akb
