#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <vector>

#include "akb/beta_set.hpp"
#include "akb/partition.hpp"

namespace akb {

// Charged partition.  The modulus e is always an operation parameter, never
// part of the value.
struct AbacusConfig {
    Partition partition;
    Int charge = 0;

    bool operator==(const AbacusConfig&) const = default;
    auto operator<=>(const AbacusConfig&) const = default;
};

// Charged multipartition: one charged component per level.
struct MultiAbacus {
    std::vector<AbacusConfig> components;

    std::size_t level() const { return components.size(); }
    Int size() const;                  // total number of nodes
    std::vector<Int> charges() const;  // component charges in order

    bool operator==(const MultiAbacus&) const = default;
    auto operator<=>(const MultiAbacus&) const = default;
};

// e-quotient with runner charges: reading the beta-set runner by runner
// yields one charged partition per residue class.  The runner charges always
// sum to the charge of the source configuration.
struct RunnerDecomposition {
    std::vector<Partition> quotient;
    std::vector<Int> charges;

    std::size_t modulus() const { return quotient.size(); }
    Int weight() const;  // |quotient|, the e-weight of the source partition

    // The decomposition viewed as an e-tuple of charged partitions, for
    // comparing decompositions under block equivalence at another modulus.
    MultiAbacus as_multi_abacus() const;

    bool operator==(const RunnerDecomposition&) const = default;
    auto operator<=>(const RunnerDecomposition&) const = default;
};

// Moves the bead at b to the free position c.
AbacusConfig move_bead(const AbacusConfig& x, Int b, Int c);

// Splits the beta-set of x across the e runners (position b lies on runner
// b mod e, row floor(b/e)); each runner read as a beta-set of row indices.
RunnerDecomposition runner_decomposition(const AbacusConfig& x, int e);

// Inverse of runner_decomposition; d must carry exactly e runners.
AbacusConfig from_runner_decomposition(const RunnerDecomposition& d, int e);

// e-core (partition left after the e-quotient is emptied) and e-weight.
std::pair<Partition, Int> core_and_weight(const Partition& lambda, int e);

// Componentwise e-core with charges kept; seeds the core block of a block.
MultiAbacus componentwise_core(const MultiAbacus& m, int e);

} // namespace akb

template <>
struct std::hash<akb::AbacusConfig> {
    std::size_t operator()(const akb::AbacusConfig& x) const {
        return akb::hash_combine(std::hash<akb::Partition>{}(x.partition),
                                 std::hash<akb::Int>{}(x.charge));
    }
};

template <>
struct std::hash<akb::MultiAbacus> {
    std::size_t operator()(const akb::MultiAbacus& m) const {
        std::size_t h = 0x9ec0de;
        for (const auto& c : m.components) h = akb::hash_combine(h, std::hash<akb::AbacusConfig>{}(c));
        return h;
    }
};
