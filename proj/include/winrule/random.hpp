#ifndef WINRULE_RANDOM_HPP
#define WINRULE_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

#include "winrule/core.hpp"

namespace winrule {

using Seed = std::uint64_t;
using Rng = std::mt19937_64;

/// Derives an independent child seed for a named stream.
///
/// SplitMix64 finalizer over (parent, stream); consecutive streams of one
/// parent give unrelated seeds.
inline Seed derive_seed(Seed parent, std::uint64_t stream) {
    std::uint64_t z = parent + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Stream tags. Keep stable: changing one changes every seeded result.
namespace stream {
inline constexpr std::uint64_t subset = 1;
inline constexpr std::uint64_t window = 2;
inline constexpr std::uint64_t learner = 3;
inline constexpr std::uint64_t resample = 4;
inline constexpr std::uint64_t noise = 5;
}  // namespace stream

/// First `k` entries of a seeded random permutation of `items`, followed by
/// the rest. Returns (chosen, rest); both in permutation order.
inline std::pair<IndexList, IndexList> random_partition(std::span<const ExampleIndex> items,
                                                        std::size_t k, Seed seed) {
    IndexList perm(items.begin(), items.end());
    k = std::min(k, perm.size());
    Rng rng(seed);
    // Partial Fisher-Yates: only the first k positions need to be drawn.
    for (std::size_t i = 0; i < k; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, perm.size() - 1);
        std::swap(perm[i], perm[pick(rng)]);
    }
    IndexList rest(perm.begin() + static_cast<std::ptrdiff_t>(k), perm.end());
    perm.resize(k);
    return {std::move(perm), std::move(rest)};
}

/// Uniform sample without replacement of min(k, |candidates|) indices.
inline IndexList resample_candidates(std::span<const ExampleIndex> candidates, std::size_t k,
                                     Seed seed) {
    if (k == 0) throw Error("resample size must be at least 1");
    if (candidates.size() <= k) return IndexList(candidates.begin(), candidates.end());
    return random_partition(candidates, k, seed).first;
}

}  // namespace winrule

#endif  // WINRULE_RANDOM_HPP
