#include "akb/blocks.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "akb/error.hpp"

namespace akb {

namespace {

// Beads that can move down by e (window beads whose spot below is free).
std::vector<Int> down_movable(const BetaSet& b, int e) {
    std::vector<Int> out;
    for (Int pos : b.window())
        if (!b.contains(pos - e)) out.push_back(pos);
    return out;
}

// Beads that can move up by e: window beads plus the top e tail beads.
std::vector<Int> up_movable(const BetaSet& b, int e) {
    std::vector<Int> out;
    for (Int pos = b.floor() - e; pos < b.floor(); ++pos)
        if (!b.contains(pos + e)) out.push_back(pos);
    for (Int pos : b.window())
        if (!b.contains(pos + e)) out.push_back(pos);
    return out;
}

MultiAbacus with_component(const MultiAbacus& m, std::size_t k, const BetaSet& b) {
    MultiAbacus out = m;
    auto [lambda, s] = abacus_to_partition(b);
    out.components[k] = {std::move(lambda), s};
    return out;
}

} // namespace

std::vector<MultiAbacus> hook_transfer_neighbors(const MultiAbacus& m, int e) {
    std::vector<BetaSet> beta;
    beta.reserve(m.level());
    for (const auto& c : m.components) beta.push_back(beta_set(c.partition, c.charge));

    std::unordered_set<MultiAbacus> seen;
    std::vector<MultiAbacus> out;
    for (std::size_t k1 = 0; k1 < m.level(); ++k1) {
        for (Int b1 : down_movable(beta[k1], e)) {
            BetaSet lowered = beta[k1].replaced(b1, b1 - e);
            MultiAbacus mid = with_component(m, k1, lowered);
            for (std::size_t k2 = 0; k2 < m.level(); ++k2) {
                const BetaSet& src = (k2 == k1) ? lowered : beta[k2];
                for (Int b2 : up_movable(src, e)) {
                    MultiAbacus res = with_component(mid, k2, src.replaced(b2, b2 + e));
                    if (res == m) continue;
                    if (seen.insert(res).second) {
                        assert(block_equivalent(m, res, e));
                        out.push_back(std::move(res));
                    }
                }
            }
        }
    }
    return out;
}

std::vector<MultiAbacus> hook_exchange_neighbors(const MultiAbacus& m, int e) {
    std::vector<BetaSet> beta;
    beta.reserve(m.level());
    for (const auto& c : m.components) beta.push_back(beta_set(c.partition, c.charge));

    std::unordered_set<MultiAbacus> seen;
    std::vector<MultiAbacus> out;
    // Component k2 loses the hook: bead c2 drops to the free position b2.
    // Component k1 gains it: bead b1, congruent to b2 mod e, rises by the
    // same distance h.
    for (std::size_t k2 = 0; k2 < m.level(); ++k2) {
        for (Int c2 : beta[k2].window()) {
            for (Int b2 = beta[k2].floor(); b2 < c2; ++b2) {
                if (beta[k2].contains(b2)) continue;
                Int h = c2 - b2;
                for (std::size_t k1 = 0; k1 < m.level(); ++k1) {
                    for (Int b1 : beta[k1].members_from(beta[k1].floor() - h)) {
                        if (floormod(b1 - b2, e) != 0) continue;
                        if (beta[k1].contains(b1 + h)) continue;
                        if (k1 == k2 && (b1 == c2 || b2 == b1 + h)) continue;
                        MultiAbacus res = with_component(m, k1, beta[k1].replaced(b1, b1 + h));
                        res = with_component(res, k2,
                                             beta_set(res.components[k2].partition,
                                                      res.components[k2].charge)
                                                 .replaced(c2, b2));
                        if (res == m) continue;
                        if (seen.insert(res).second) {
                            assert(block_equivalent(m, res, e));
                            out.push_back(std::move(res));
                        }
                    }
                }
            }
        }
    }
    return out;
}

std::vector<MultiAbacus> neighbors(const MultiAbacus& m, int e) {
    std::vector<MultiAbacus> out = hook_transfer_neighbors(m, e);
    std::unordered_set<MultiAbacus> seen(out.begin(), out.end());
    for (auto& x : hook_exchange_neighbors(m, e))
        if (seen.insert(x).second) out.push_back(std::move(x));
    return out;
}

Block generate_block(const MultiAbacus& seed, int e) {
    std::unordered_set<MultiAbacus> visited{seed};
    std::deque<MultiAbacus> queue{seed};
    while (!queue.empty()) {
        MultiAbacus cur = std::move(queue.front());
        queue.pop_front();
        for (auto& next : neighbors(cur, e))
            if (visited.insert(next).second) queue.push_back(next);
    }

    Block b;
    b.e = e;
    b.charges = seed.charges();
    b.residues = residue_multiset(seed, e);
    b.members.assign(visited.begin(), visited.end());
    std::sort(b.members.begin(), b.members.end());
    return b;
}

Int multipartition_count(Int n, std::size_t level) {
    // Convolve partition counts level times.
    std::vector<Int> acc(static_cast<std::size_t>(n) + 1, 0);
    acc[0] = 1;
    std::vector<Int> p(static_cast<std::size_t>(n) + 1);
    for (Int j = 0; j <= n; ++j) p[static_cast<std::size_t>(j)] = partition_count(j);
    for (std::size_t k = 0; k < level; ++k) {
        std::vector<Int> next(static_cast<std::size_t>(n) + 1, 0);
        for (Int a = 0; a <= n; ++a)
            for (Int j = 0; a + j <= n; ++j)
                next[static_cast<std::size_t>(a + j)] += acc[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(j)];
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(n)];
}

namespace {

void emit_multipartitions(Int n, std::size_t k, const std::vector<Int>& charges,
                          MultiAbacus& cur, std::vector<MultiAbacus>& out) {
    if (k + 1 == charges.size()) {
        for (const Partition& p : partitions_of(n)) {
            cur.components[k] = {p, charges[k]};
            out.push_back(cur);
        }
        return;
    }
    for (Int j = 0; j <= n; ++j)
        for (const Partition& p : partitions_of(j)) {
            cur.components[k] = {p, charges[k]};
            emit_multipartitions(n - j, k + 1, charges, cur, out);
        }
}

} // namespace

std::vector<MultiAbacus> multipartitions_of(Int n, const std::vector<Int>& charges) {
    if (charges.empty()) throw std::invalid_argument("level must be >= 1");
    std::vector<MultiAbacus> out;
    MultiAbacus cur;
    cur.components.assign(charges.size(), AbacusConfig{});
    emit_multipartitions(n, 0, charges, cur, out);
    return out;
}

Block block_oracle(Int n, const std::vector<Int>& charges, int e,
                   const ResidueMultiset& target, Int limit) {
    Int candidates = multipartition_count(n, charges.size());
    if (candidates > limit)
        throw ExplosionGuard("enumeration of " + std::to_string(candidates) +
                             " multipartitions exceeds limit " + std::to_string(limit));

    Block b;
    b.e = e;
    b.charges = charges;
    b.residues = target;
    for (auto& m : multipartitions_of(n, charges))
        if (residue_multiset(m, e) == target) b.members.push_back(std::move(m));
    std::sort(b.members.begin(), b.members.end());
    return b;
}

Block block_oracle(const MultiAbacus& seed, int e, Int limit) {
    return block_oracle(seed.size(), seed.charges(), e, residue_multiset(seed, e), limit);
}

Int hook_weight(const MultiAbacus& m, int e) {
    Int total = 0;
    for (const auto& c : m.components) total += core_and_weight(c.partition, e).second;
    return total;
}

Int block_hook_weight(const Block& b) {
    Int best = 0;
    for (const auto& m : b.members) best = std::max(best, hook_weight(m, b.e));
    return best;
}

std::vector<MultiAbacus> max_hook_members(const Block& b) {
    Int best = block_hook_weight(b);
    std::vector<MultiAbacus> out;
    for (const auto& m : b.members)
        if (hook_weight(m, b.e) == best) out.push_back(m);
    return out;
}

bool is_core_block(const Block& b) { return block_hook_weight(b) == 0; }

std::vector<std::vector<Int>> runner_charge_matrix(const MultiAbacus& m, int e) {
    std::vector<std::vector<Int>> rows;
    rows.reserve(m.level());
    for (const auto& c : m.components) rows.push_back(runner_decomposition(c, e).charges);
    return rows;
}

std::vector<Int> base_tuple(const Block& b) {
    if (b.members.empty()) throw std::invalid_argument("block has no members");
    if (!is_core_block(b)) throw NotACoreBlock("base tuple requires a core block");
    std::size_t e = static_cast<std::size_t>(b.e);
    std::vector<Int> base = runner_charge_matrix(b.members.front(), b.e).front();
    for (const auto& m : b.members)
        for (const auto& row : runner_charge_matrix(m, b.e))
            for (std::size_t i = 0; i < e; ++i) base[i] = std::min(base[i], row[i]);
    // Cross-check: every runner charge sits at base or one above it.
    for (const auto& m : b.members)
        for (const auto& row : runner_charge_matrix(m, b.e))
            for (std::size_t i = 0; i < e; ++i)
                if (row[i] != base[i] && row[i] != base[i] + 1)
                    throw NotACoreBlock("runner charges do not fit the core-block form");
    return base;
}

bool is_staircase_block(const Block& b) {
    if (!is_core_block(b)) return false;
    for (const auto& m : b.members)
        for (const auto& row : runner_charge_matrix(m, b.e))
            for (std::size_t i = 0; i + 1 < row.size(); ++i)
                if (row[i] > row[i + 1]) return false;
    return true;
}

} // namespace akb
