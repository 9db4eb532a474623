#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace ramsey {

using Rng = std::mt19937_64;

/// Independent stream for (master seed, tags...). Identical inputs always
/// give identical streams, so work split across threads stays reproducible.
inline Rng make_stream(std::uint64_t master, std::initializer_list<std::uint64_t> tags = {})
{
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32)};
    for (auto t : tags) {
        words.push_back(static_cast<std::uint32_t>(t));
        words.push_back(static_cast<std::uint32_t>(t >> 32));
    }
    std::seed_seq seq(words.begin(), words.end());
    return Rng(seq);
}

/// Uniform integer in [lo, hi].
inline int uniform_int(Rng& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double uniform_unit(Rng& rng)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

} // namespace ramsey
