#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace mht {

// Vertices are dense integers; 64 is far beyond desk-scale campaigns but keeps
// subset bitmasks in a single word.
inline constexpr int kMaxVertices = 64;

std::uint64_t binomial(int n, int r);
std::uint64_t factorial(int k);

/// Colexicographic rank of a strictly increasing vertex subset.
std::uint64_t subset_rank(std::span<const int> sorted_subset);

/// Inverse of subset_rank; writes the subset in ascending order.
void subset_unrank(std::uint64_t rank, int k, std::span<int> out);

/// Reorders `items` according to a permutation index in [0, k!).
/// Index 0 leaves the order unchanged (factorial-base / Lehmer decoding).
void apply_permutation_rank(std::uint64_t rank, std::span<int> items);

/// Visits every k-subset of {0..n-1} in colexicographic order, i.e. in
/// increasing subset_rank order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    if (k == 0) {
        fn(std::span<const int>(s));
        return;
    }
    while (true) {
        fn(std::span<const int>(s));
        int i = 0;
        while (i < k) {
            int next = (i + 1 < k) ? s[i + 1] : n;
            if (s[i] + 1 < next) break;
            ++i;
        }
        if (i == k) return;
        ++s[i];
        for (int j = 0; j < i; ++j) s[j] = j;
    }
}

}  // namespace mht
