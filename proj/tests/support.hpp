#pragma once

#include <random>
#include <vector>

#include "spechtkit/partition.hpp"

namespace testsupport {

using spechtkit::Partition;

// All partitions of n with parts at most max_part, by plain recursion.
inline void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

inline std::vector<Partition> partitions_up_to(int max_n)
{
    std::vector<Partition> out;
    for (int n = 0; n <= max_n; ++n)
        for (auto& l : partitions_of(n))
            out.push_back(l);
    return out;
}

// Random partition of n: random composition sorted into a partition.
inline Partition random_partition(std::mt19937& rng, int n)
{
    std::vector<int> parts;
    int left = n;
    while (left > 0) {
        int k = std::uniform_int_distribution<int>(1, left)(rng);
        parts.push_back(k);
        left -= k;
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

} // namespace testsupport
