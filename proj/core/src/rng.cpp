// Copyright the nmrank authors. Licensed under the terms of the Apache 2.0 license.
// See LICENSE in the project root.
#include "nmrank/rng.hpp"

#include <numeric>
#include <stdexcept>

namespace nmrank {

std::vector<std::uint32_t> Rng::sample_without_replacement(std::uint32_t n, std::uint32_t k) {
    if (k > n) throw std::invalid_argument("sample_without_replacement: k > n");
    // Partial Fisher-Yates over an index array.
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0u);
    std::vector<std::uint32_t> out;
    out.reserve(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        const std::uint64_t j = i + below(n - i);
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    return out;
}

} // namespace nmrank
