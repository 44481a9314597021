#pragma once

// Deterministic randomness. mt19937_64 has a standard-specified output
// sequence; uniforms are built from the top 53 bits directly, because
// std::uniform_real_distribution is implementation-defined and would break
// cross-platform reproducibility.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "bios/io.hpp"

namespace bios::rnd {

inline double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

// Independent stream for a keyed unit of work, so parallel or reordered
// processing cannot change results.
inline std::mt19937_64 make_stream(uint64_t seed, std::string_view key, uint64_t counter = 0) {
    uint64_t h = io::fnv1a_u64(seed);
    h = io::fnv1a(key, h);
    h = io::fnv1a_u64(counter, h);
    return std::mt19937_64(h);
}

// Partial Fisher-Yates selection of k distinct indices from [0, n), returned sorted.
inline std::vector<size_t> sample_indices(std::mt19937_64& rng, size_t n, size_t k) {
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    if (k > n) k = n;
    for (size_t i = 0; i < k; ++i) {
        size_t j = i + static_cast<size_t>(rng() % (n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

}  // namespace bios::rnd
