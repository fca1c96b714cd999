#include "akb/residue.hpp"

#include <numeric>
#include <stdexcept>

#include "akb/error.hpp"

namespace akb {

std::vector<Int> reduced_multicharge(const std::vector<Int>& charges, int e) {
    if (e < 1) throw std::invalid_argument("modulus must be >= 1");
    std::vector<Int> out;
    out.reserve(charges.size());
    for (Int s : charges) out.push_back(floormod(s, e));
    return out;
}

Int ResidueMultiset::total() const {
    return std::accumulate(counts.begin(), counts.end(), Int{0});
}

ResidueMultiset residue_multiset(const MultiAbacus& m, int e) {
    if (e < 1) throw std::invalid_argument("modulus must be >= 1");
    ResidueMultiset res;
    res.counts.assign(static_cast<std::size_t>(e), 0);
    for (const auto& comp : m.components) {
        Int a = floormod(comp.charge, e);
        const auto& parts = comp.partition.parts();
        for (std::size_t x = 0; x < parts.size(); ++x) {
            // Row x+1 holds residues a + 1 - (x+1) .. a + parts[x] - (x+1).
            Int first = a - static_cast<Int>(x);
            for (Int y = 0; y < parts[x]; ++y)
                ++res.counts[static_cast<std::size_t>(floormod(first + y, e))];
        }
    }
    return res;
}

bool same_block(const MultiAbacus& x, const MultiAbacus& y, int e) {
    if (x.charges() != y.charges())
        throw ChargeMismatch("block comparison requires equal charge vectors");
    return residue_multiset(x, e) == residue_multiset(y, e);
}

bool block_equivalent(const MultiAbacus& x, const MultiAbacus& y, int e) {
    if (x.charges() != y.charges()) return false;
    return residue_multiset(x, e) == residue_multiset(y, e);
}

} // namespace akb
