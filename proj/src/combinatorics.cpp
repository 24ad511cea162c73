#include "ocsel/combinatorics.hpp"

#include "ocsel/types.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ocsel {

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (n > 96)
        throw CapError("binomial(" + std::to_string(n) + ", ...) exceeds the "
                       "supported enumeration range");
    if (k > n - k) k = n - k;
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
        // exact at every step: c is C(n-k+i-1, i-1) before the update
        c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    }
    if (c > static_cast<unsigned __int128>(~std::uint64_t{0}))
        throw CapError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                       ") overflows the rank space");
    return static_cast<std::uint64_t>(c);
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
    if (rank >= binomial(n, k))
        throw std::out_of_range("combination rank out of range");
    std::vector<int> c(k);
    int x = 0;
    for (int pos = 0; pos < k; ++pos) {
        for (;; ++x) {
            std::uint64_t block = binomial(n - x - 1, k - pos - 1);
            if (rank < block) break;
            rank -= block;
        }
        c[pos] = x++;
    }
    return c;
}

std::vector<int> SplitMix64::subset(int n, int k) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
        int j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ocsel
