#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace akb {

using Int = long long;

// Integer partition: weakly decreasing positive parts.  Trailing zeros are
// never stored, so structural equality is partition equality.
class Partition {
public:
    Partition() = default;

    // Accepts trailing zeros and strips them; throws std::invalid_argument if
    // the sequence increases anywhere or contains a negative entry.
    explicit Partition(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    // |lambda|
    Int size() const;

    // Row i (0-based); zero beyond the last stored part.
    Int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<Int> parts_;
};

// All partitions of n, largest part first within each, in a fixed
// (reverse-lexicographic) order.
std::vector<Partition> partitions_of(Int n);

// Number of partitions of n (p(n)); used for enumeration bounds.
Int partition_count(Int n);

inline std::size_t hash_combine(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

} // namespace akb

template <>
struct std::hash<akb::Partition> {
    std::size_t operator()(const akb::Partition& p) const {
        std::size_t h = 0x51ab5f1d;
        for (akb::Int x : p.parts()) h = akb::hash_combine(h, std::hash<akb::Int>{}(x));
        return h;
    }
};
