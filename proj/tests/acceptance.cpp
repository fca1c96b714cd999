// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Each criterion recomputes its expected values from scratch and carries a
// wall-clock budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "akb/abacus.hpp"
#include "akb/blocks.hpp"
#include "akb/residue.hpp"
#include "akb/rouquier.hpp"
#include "akb/uglov.hpp"

using namespace akb;

namespace {

void check(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

MultiAbacus multi(std::vector<std::pair<std::vector<Int>, Int>> comps) {
    MultiAbacus m;
    for (auto& [parts, charge] : comps)
        m.components.push_back({Partition(std::move(parts)), charge});
    return m;
}

AbacusConfig from_eta(std::vector<std::vector<Int>> quotient, std::vector<Int> charges, int e) {
    RunnerDecomposition d;
    for (auto& q : quotient) d.quotient.emplace_back(std::move(q));
    d.charges = std::move(charges);
    return from_runner_decomposition(d, e);
}

// All charge vectors in {0..e-1}^r.
std::vector<std::vector<Int>> charge_vectors(int e, int r) {
    std::vector<std::vector<Int>> out(1);
    for (int k = 0; k < r; ++k) {
        std::vector<std::vector<Int>> next;
        for (const auto& v : out)
            for (Int c = 0; c < e; ++c) {
                auto w = v;
                w.push_back(c);
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

// Groups an enumeration into blocks keyed by residue content.
std::map<std::vector<Int>, std::vector<MultiAbacus>> residue_groups(
    const std::vector<MultiAbacus>& all, int e) {
    std::map<std::vector<Int>, std::vector<MultiAbacus>> groups;
    for (const auto& m : all) groups[residue_multiset(m, e).counts].push_back(m);
    for (auto& [key, members] : groups) std::sort(members.begin(), members.end());
    return groups;
}

Block make_block(int e, std::vector<Int> charges, std::vector<Int> counts,
                 std::vector<MultiAbacus> members) {
    return Block{e, std::move(charges), ResidueMultiset{std::move(counts)},
                 std::move(members)};
}

std::string criterion_1() {
    MultiAbacus la = multi({{{4, 3, 1}, 0}, {{3, 3}, 1}, {{1, 1}, 0}});
    MultiAbacus mu = multi({{{1, 1, 1}, 0}, {{3, 3, 3, 3}, 1}, {{1}, 0}});
    ResidueMultiset expected{{6, 5, 5}};
    check(residue_multiset(la, 3) == expected, "first residue content is off");
    check(residue_multiset(mu, 3) == expected, "second residue content is off");
    check(same_block(la, mu, 3), "the pair must share a block");
    return "";
}

std::string criterion_2() {
    RunnerDecomposition d1 = runner_decomposition({Partition({4, 2, 2, 2}), 6}, 3);
    check(d1.quotient ==
              std::vector<Partition>{Partition({1, 1}), Partition{}, Partition({1})},
          "first quotient is off");
    check(d1.charges == std::vector<Int>{3, 2, 1}, "first runner charges are off");

    RunnerDecomposition d2 = runner_decomposition({Partition({4, 3, 2, 1}), 6}, 3);
    check(d2.quotient ==
              std::vector<Partition>{Partition({1}), Partition({1}), Partition({1})},
          "second quotient is off");
    check(d2.charges == std::vector<Int>{3, 2, 1}, "second runner charges are off");

    check(core_and_weight(Partition({4, 2, 2, 2}), 3).first == Partition({1}),
          "first core is off");
    check(core_and_weight(Partition({4, 3, 2, 1}), 3).first == Partition({1}),
          "second core is off");
    return "";
}

std::string criterion_3() {
    MultiAbacus m = multi({{{2, 2, 1, 1}, 7}, {{3, 1, 1, 1, 1, 1}, 9}});
    AbacusConfig fused = fuse(m, 3);
    check(fused.charge == 16, "fused charge must be 16");
    RunnerDecomposition d = runner_decomposition(fused, 3);
    check(d.quotient == std::vector<Partition>{Partition({2}), Partition{}, Partition{}},
          "fused quotient is off");
    check(d.charges == std::vector<Int>{3, 6, 7}, "fused runner charges are off");
    check(split(fused, 2, 3) == m, "splitting must return the input");

    AbacusConfig mate{Partition({8, 3, 3, 2, 2, 1, 1, 1, 1, 1}), 16};
    check(same_block(MultiAbacus{{fused}}, MultiAbacus{{mate}}, 3),
          "the mate must share the fused block");
    MultiAbacus s = split(mate, 2, 3);
    check(s == multi({{{3, 1, 1}, 9}, {{2, 2, 1, 1}, 7}}), "mate split is off");
    check(!block_equivalent(s, m, 3), "the two split images must lie in different blocks");
    return "";
}

std::string criterion_4() {
    MultiAbacus seeds[] = {
        multi({{{1}, 0}, {{}, 0}, {{}, 0}}),
        multi({{{}, 0}, {{1}, 0}, {{}, 0}}),
        multi({{{}, 0}, {{}, 0}, {{1}, 0}}),
    };
    MultiAbacus images[] = {
        multi({{{2}, 1}, {{}, 0}, {{}, -1}}),
        multi({{{1}, 1}, {{}, 0}, {{1}, -1}}),
        multi({{{}, 1}, {{}, 0}, {{1, 1}, -1}}),
    };
    for (int i = 0; i < 3; ++i)
        check(level_rank(seeds[i], 3).as_multi_abacus() == images[i],
              "image " + std::to_string(i + 1) + " is off");
    Block dual = generate_block(images[0], 3);
    std::vector<MultiAbacus> sorted(images, images + 3);
    std::sort(sorted.begin(), sorted.end());
    check(dual.members == sorted, "the images must form one whole class");
    return "";
}

std::string criterion_5() {
    Block eight = generate_block(multi({{{2, 2, 1, 1}, 7}, {{3, 1, 1, 1, 1, 1}, 9}}), 3);
    check(eight.size() == 8, "first class must have exactly 8 members");
    Block lone = generate_block(multi({{{3, 1, 1}, 9}, {{2, 2, 1, 1}, 7}}), 3);
    check(lone.size() == 1, "companion class must be a singleton");
    Block three = generate_block(multi({{{1}, 0}, {{}, 0}, {{}, 0}}), 3);
    check(three.size() == 3, "level three class must have exactly 3 members");
    return "";
}

std::string criterion_6() {
    Int blocks = 0;
    for (int e : {2, 3})
        for (int r : {1, 2})
            for (const auto& charges : charge_vectors(e, r))
                for (Int n = 0; n <= 6; ++n)
                    for (auto& [key, members] : residue_groups(multipartitions_of(n, charges), e)) {
                        Block closure = generate_block(members.front(), e);
                        check(closure.members == members,
                              "move closure differs from the enumeration filter");
                        ++blocks;
                    }
    check(blocks > 0, "sweep looks too small");
    return std::to_string(blocks) + " blocks";
}

std::string criterion_7() {
    for (int e : {2, 3})
        for (int r : {1, 2})
            for (const auto& charges : charge_vectors(e, r))
                for (Int n = 0; n <= 6; ++n) {
                    // Source grouping by residue content at e; image grouping
                    // by runner charges plus residue content at r.  The two
                    // groupings must coincide, and fusing must be constant on
                    // each group.
                    using ImageKey = std::pair<std::vector<Int>, std::vector<Int>>;
                    std::map<std::vector<Int>, ImageKey> forward;
                    std::map<ImageKey, std::vector<Int>> backward;
                    std::map<std::vector<Int>, std::vector<Int>> fuse_key;
                    for (const auto& m : multipartitions_of(n, charges)) {
                        std::vector<Int> src = residue_multiset(m, e).counts;
                        RunnerDecomposition d = level_rank(m, e);
                        ImageKey img{d.charges,
                                     residue_multiset(d.as_multi_abacus(), r).counts};
                        auto [fit, fnew] = forward.try_emplace(src, img);
                        check(fnew || fit->second == img,
                              "equivalent sources map to inequivalent images");
                        auto [bit, bnew] = backward.try_emplace(img, src);
                        check(bnew || bit->second == src,
                              "inequivalent sources map to equivalent images");

                        AbacusConfig f = fuse(m, e);
                        std::vector<Int> fk = residue_multiset(MultiAbacus{{f}}, e).counts;
                        auto [kit, knew] = fuse_key.try_emplace(src, fk);
                        check(knew || kit->second == fk,
                              "fusing splits a block apart");
                    }
                }
    return "";
}

std::string criterion_8() {
    Int rr_classes = 0, nonrq = 0;
    for (int e : {2, 3}) {
        for (Int s = 0; s < e; ++s)
            for (Int n = 0; n <= 6; ++n)
                for (auto& [key, members] :
                     residue_groups(multipartitions_of(n, {s}), e)) {
                    Block b = make_block(e, {s}, key, members);
                    for (int r : {1, 2}) {
                        if (!is_r_rouquier_block(b, r)) continue;
                        ++rr_classes;
                        for (const Block& part : phi_block_decomposition(b, r))
                            check(is_rouquier_block(part),
                                  "a split part of a headroom class is not a "
                                  "whole-gap block");
                    }
                }
        for (int r : {1, 2})
            for (const auto& charges : charge_vectors(e, r))
                for (Int n = 4; n <= 6; ++n) {
                    Int sampled = 0;
                    for (const auto& m : multipartitions_of(n, charges)) {
                        if (is_rouquier_multipartition(m, e)) continue;
                        check(!is_r_rouquier_partition(fuse(m, e), e, r),
                              "a narrow-gap multipartition fused into a "
                              "headroom class");
                        ++nonrq;
                        if (++sampled >= 200) break;
                    }
                }
    }
    check(rr_classes > 0 && nonrq > 0, "sweep looks too small");
    return std::to_string(rr_classes) + " headroom classes, " + std::to_string(nonrq) +
           " narrow samples";
}

std::string criterion_9() {
    Int normalized = 0;
    for (int e : {2, 3})
        for (int r : {1, 2})
            for (const auto& charges : charge_vectors(e, r))
                for (Int n = 0; n <= 6; ++n)
                    for (auto& [key, members] :
                         residue_groups(multipartitions_of(n, charges), e)) {
                        Block b = make_block(e, charges, key, members);
                        if (!is_core_block(b) && !is_rouquier_block(b)) continue;
                        auto [chain, target] = rouquier_normalize(b);
                        check(fused_block_r_rouquier(target),
                              "normalized block must pass the fused headroom test");
                        check(replay_chain(b, chain) == target,
                              "replaying the chain must land on the target");
                        ++normalized;
                    }
    check(normalized > 0, "sweep looks too small");
    return std::to_string(normalized) + " blocks normalized";
}

std::string criterion_10() {
    std::vector<std::vector<Int>> one_box = {{1}, {}, {}, {}, {}, {}};
    std::vector<std::vector<Int>> empty(6);
    std::vector<Int> t1{2, 3, 4, 6, 7, 8};
    std::vector<Int> t2{1, 2, 3, 7, 8, 9};
    AbacusConfig c1 = from_eta(one_box, t1, 6);
    AbacusConfig c2 = from_eta(empty, t2, 6);
    check(c1.charge == 30 && c2.charge == 30, "component charges must be 30");

    Block b = generate_block(MultiAbacus{{c1, c2}}, 6);
    check(is_rouquier_block(b), "the block must have whole charge gaps");

    // Bounded search over congruent charge shifts: no shift within the window
    // makes the fused image pass the level-two headroom inequality.  This is
    // a desk check of a finite window, not a proof for all shifts.
    for (Int a = -3; a <= 3; ++a)
        for (Int bshift = -3; bshift <= 3; ++bshift) {
            std::vector<Int> s1 = t1, s2 = t2;
            for (auto& t : s1) t += a;
            for (auto& t : s2) t += bshift;
            AbacusConfig f =
                fuse(MultiAbacus{{from_eta(one_box, s1, 6), from_eta(empty, s2, 6)}}, 6);
            check(!is_r_rouquier_partition(f, 6, 2),
                  "a shifted image passed the headroom inequality at shift (" +
                      std::to_string(a) + "," + std::to_string(bshift) + ")");
        }
    return "49 shifts rejected";
}

struct Criterion {
    int id;
    const char* label;
    double budget_ms;
    std::function<std::string()> body;
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {1, "residue contents and block equality for the level three pair", 1.0,
         criterion_1},
        {2, "runner decompositions and the shared core", 1.0, criterion_2},
        {3, "fuse and split on the worked level two pair", 10.0, criterion_3},
        {4, "level-rank images form a single dual class", 10.0, criterion_4},
        {5, "class sizes 8, 1 and 3", 1000.0, criterion_5},
        {6, "move closure equals brute-force enumeration on the sweep", 60000.0,
         criterion_6},
        {7, "fusing preserves blocks and the dual grouping matches", 120000.0,
         criterion_7},
        {8, "headroom classes split into whole-gap blocks; narrow gaps never fuse in",
         60000.0, criterion_8},
        {9, "normalization terminates, passes and replays on the sweep", 120000.0,
         criterion_9},
        {10, "no congruent charge shift in the window fixes the level two image",
         60000.0, criterion_10},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string error, detail;
        try {
            detail = c.body();
        } catch (const std::exception& ex) {
            error = ex.what();
        }
        double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
        if (error.empty() && ms > c.budget_ms)
            error = "budget exceeded (" + std::to_string(c.budget_ms) + " ms)";
        if (error.empty()) {
            std::printf("PASS criterion %2d [%9.2f ms] %s%s%s\n", c.id, ms, c.label,
                        detail.empty() ? "" : ": ", detail.c_str());
        } else {
            std::printf("FAIL criterion %2d [%9.2f ms] %s: %s\n", c.id, ms, c.label,
                        error.c_str());
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
