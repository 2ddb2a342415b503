#ifndef WINRULE_POSTPROCESS_HPP
#define WINRULE_POSTPROCESS_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "winrule/core.hpp"

namespace winrule {

/// Removes rules whose training coverage is entirely covered by the other
/// remaining rules.
///
/// Rules are visited from least to most training coverage (ties keep the
/// original order) and deletions are visible to later checks. Surviving
/// rules keep their original relative order. Training-set classification is
/// unchanged.
inline Theory remove_redundant_rules(const Theory& theory, const Dataset& training) {
    const std::size_t k = theory.rules.size();
    std::vector<IndexList> covers_of(k);
    std::vector<std::uint32_t> cover_count(training.size(), 0);
    for (std::size_t r = 0; r < k; ++r) {
        for (ExampleIndex i = 0; i < training.size(); ++i)
            if (theory.rules[r].covers(training[i].values)) covers_of[r].push_back(i);
        for (auto i : covers_of[r]) ++cover_count[i];
    }

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return covers_of[a].size() < covers_of[b].size();
    });

    std::vector<bool> removed(k, false);
    for (auto r : order) {
        const auto& cov = covers_of[r];
        const bool redundant = std::all_of(cov.begin(), cov.end(),
                                           [&](ExampleIndex i) { return cover_count[i] >= 2; });
        if (!redundant) continue;
        removed[r] = true;
        for (auto i : cov) --cover_count[i];
    }

    Theory out;
    for (std::size_t r = 0; r < k; ++r)
        if (!removed[r]) out.rules.push_back(theory.rules[r]);
    return out;
}

}  // namespace winrule

#endif  // WINRULE_POSTPROCESS_HPP
