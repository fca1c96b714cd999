#include "akb/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace akb {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition part is negative");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts increase");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), Int{0});
}

namespace {

void emit_partitions(Int n, Int max_part, std::vector<Int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (Int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        emit_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(Int n) {
    std::vector<Partition> out;
    std::vector<Int> cur;
    if (n >= 0) emit_partitions(n, n, cur, out);
    return out;
}

Int partition_count(Int n) {
    if (n < 0) return 0;
    // p(k) via Euler's recurrence with generalized pentagonal numbers.
    std::vector<Int> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (Int k = 1; k <= n; ++k) {
        Int total = 0;
        for (Int j = 1;; ++j) {
            Int g1 = j * (3 * j - 1) / 2;
            Int g2 = j * (3 * j + 1) / 2;
            if (g1 > k && g2 > k) break;
            Int sign = (j % 2 == 1) ? 1 : -1;
            if (g1 <= k) total += sign * p[k - g1];
            if (g2 <= k) total += sign * p[k - g2];
        }
        p[k] = total;
    }
    return p[n];
}

} // namespace akb
