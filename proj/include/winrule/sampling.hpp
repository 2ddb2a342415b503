#ifndef WINRULE_SAMPLING_HPP
#define WINRULE_SAMPLING_HPP

#include <algorithm>
#include <random>
#include <utility>

#include "winrule/core.hpp"
#include "winrule/random.hpp"

namespace winrule {

/// Uniform sample of `size` positions out of 0..n-1 without replacement.
/// Both parts are returned in ascending order.
inline std::pair<IndexList, IndexList> sample_indices(std::size_t n, std::size_t size, Seed seed) {
    if (size < 1 || size > n)
        throw Error("sample size " + std::to_string(size) + " outside 1.." + std::to_string(n));
    IndexList all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    auto [chosen, rest] = random_partition(all, size, seed);
    std::sort(chosen.begin(), chosen.end());
    std::sort(rest.begin(), rest.end());
    return {std::move(chosen), std::move(rest)};
}

/// (subset, remainder), both keeping the dataset's relative order.
inline std::pair<Dataset, Dataset> sample_split(const Dataset& data, std::size_t size, Seed seed) {
    auto [chosen, rest] = sample_indices(data.size(), size, seed);
    return {data.subset(chosen), data.subset(rest)};
}

struct NoiseSpec {
    double level = 0.0;
    Seed seed = 0;
};

/// Each example is selected with probability `level`; a selected example
/// gets a label drawn uniformly from both classes, so about level/2 of the
/// labels actually change. Values and order are untouched.
inline Dataset inject_noise(const Dataset& data, const NoiseSpec& spec) {
    if (!(spec.level >= 0.0 && spec.level <= 1.0))
        throw Error("noise level must lie in [0, 1]");
    Dataset out = data;
    Rng rng(spec.seed);
    std::bernoulli_distribution select(spec.level), coin(0.5);
    for (ExampleIndex i = 0; i < out.size(); ++i)
        if (select(rng)) out.set_label(i, coin(rng) ? Label::positive : Label::negative);
    return out;
}

}  // namespace winrule

#endif  // WINRULE_SAMPLING_HPP
