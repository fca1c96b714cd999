#include "akb/abacus.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

#include "akb/error.hpp"

namespace akb {

Int MultiAbacus::size() const {
    Int total = 0;
    for (const auto& c : components) total += c.partition.size();
    return total;
}

std::vector<Int> MultiAbacus::charges() const {
    std::vector<Int> out;
    out.reserve(components.size());
    for (const auto& c : components) out.push_back(c.charge);
    return out;
}

Int RunnerDecomposition::weight() const {
    Int total = 0;
    for (const auto& p : quotient) total += p.size();
    return total;
}

MultiAbacus RunnerDecomposition::as_multi_abacus() const {
    MultiAbacus m;
    m.components.reserve(quotient.size());
    for (std::size_t i = 0; i < quotient.size(); ++i)
        m.components.push_back({quotient[i], charges[i]});
    return m;
}

AbacusConfig move_bead(const AbacusConfig& x, Int b, Int c) {
    BetaSet moved = beta_set(x.partition, x.charge).replaced(b, c);
    auto [lambda, s] = abacus_to_partition(moved);
    return {std::move(lambda), s};
}

RunnerDecomposition runner_decomposition(const AbacusConfig& x, int e) {
    if (e < 1) throw std::invalid_argument("modulus must be >= 1");
    BetaSet b = beta_set(x.partition, x.charge);

    // Runner i is full below row_low[i], the least row at or above the floor.
    std::vector<Int> row_low(static_cast<std::size_t>(e));
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) {
        Int lo = b.floor() - i;  // smallest m with m*e + i >= floor
        row_low[static_cast<std::size_t>(i)] = floordiv(lo + e - 1, e);
    }
    for (Int pos : b.window()) {
        Int i = floormod(pos, e);
        rows[static_cast<std::size_t>(i)].push_back(floordiv(pos, e));
    }

    RunnerDecomposition d;
    d.quotient.reserve(static_cast<std::size_t>(e));
    d.charges.reserve(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i) {
        BetaSet runner(row_low[static_cast<std::size_t>(i)],
                       std::move(rows[static_cast<std::size_t>(i)]));
        auto [rho, t] = abacus_to_partition(runner);
        d.quotient.push_back(std::move(rho));
        d.charges.push_back(t);
    }
    assert(std::accumulate(d.charges.begin(), d.charges.end(), Int{0}) == x.charge);
    return d;
}

AbacusConfig from_runner_decomposition(const RunnerDecomposition& d, int e) {
    if (e < 1 || d.quotient.size() != static_cast<std::size_t>(e) ||
        d.charges.size() != static_cast<std::size_t>(e))
        throw std::invalid_argument("decomposition must carry exactly e runners and charges");

    std::vector<BetaSet> runners;
    runners.reserve(static_cast<std::size_t>(e));
    for (int i = 0; i < e; ++i)
        runners.push_back(beta_set(d.quotient[static_cast<std::size_t>(i)],
                                   d.charges[static_cast<std::size_t>(i)]));

    // Everything below the lowest runner floor (in position terms) is a member.
    Int low = runners[0].floor() * e;
    for (int i = 1; i < e; ++i)
        low = std::min(low, runners[static_cast<std::size_t>(i)].floor() * e + i);

    std::vector<Int> members;
    for (int i = 0; i < e; ++i) {
        const BetaSet& r = runners[static_cast<std::size_t>(i)];
        Int row_from = floordiv(low - i + e - 1, e);  // least row with position >= low
        for (Int m : r.members_from(std::min(row_from, r.floor()))) {
            Int pos = m * e + i;
            if (pos >= low) members.push_back(pos);
        }
    }
    auto [lambda, s] = abacus_to_partition(BetaSet(low, std::move(members)));
    return {std::move(lambda), s};
}

std::pair<Partition, Int> core_and_weight(const Partition& lambda, int e) {
    RunnerDecomposition d = runner_decomposition({lambda, 0}, e);
    Int w = d.weight();
    for (auto& rho : d.quotient) rho = Partition();
    AbacusConfig packed = from_runner_decomposition(d, e);
    assert(packed.charge == 0);
    return {packed.partition, w};
}

MultiAbacus componentwise_core(const MultiAbacus& m, int e) {
    MultiAbacus out;
    out.components.reserve(m.components.size());
    for (const auto& c : m.components) {
        RunnerDecomposition d = runner_decomposition(c, e);
        for (auto& rho : d.quotient) rho = Partition();
        out.components.push_back(from_runner_decomposition(d, e));
        assert(out.components.back().charge == c.charge);
    }
    return out;
}

} // namespace akb
