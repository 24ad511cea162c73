#pragma once

#include <cstdint>
#include <vector>

namespace ocsel {

// C(n, k) without overflow for the sizes the solver caps admit
// (n <= 64 keeps every value below 2^63).
std::uint64_t binomial(int n, int k);

// Lexicographic successor of a sorted k-subset of [0, n). Returns false
// when c was the last combination.
bool next_combination(std::vector<int>& c, int n);

// The rank-th sorted k-subset of [0, n) in lexicographic order.
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank);

// Deterministic 64-bit generator. Used instead of <random> distributions
// so seeded runs produce identical streams on every platform.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), bound >= 1
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (~bound + 1) % bound; // 2^64 mod bound
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // sorted random k-subset of [0, n), without replacement
    std::vector<int> subset(int n, int k);
};

} // namespace ocsel
