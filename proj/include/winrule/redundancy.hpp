#ifndef WINRULE_REDUNDANCY_HPP
#define WINRULE_REDUNDANCY_HPP

#include <cmath>
#include <vector>

#include "winrule/core.hpp"

namespace winrule {

struct RedundancyReport {
    double cpe = 0.0;      // conditional population entropy, bits
    double max_cpe = 0.0;  // sum over attributes of log2(domain size)
    double red = 0.0;      // 1 - cpe / max_cpe
};

/// Conditional population entropy and the normalized redundancy estimate.
///
/// CPE = -sum_c p(c) sum_a sum_v p(a=v | c) log2 p(a=v | c), with empirical
/// frequencies. Domain sizes are the declared ones, observed or not.
/// Only symbolic attributes are supported.
inline RedundancyReport compute_redundancy(const Dataset& data) {
    const Schema& schema = data.schema();
    for (const auto& a : schema)
        if (a.is_numeric())
            throw Error("redundancy estimate is undefined for numeric attribute '" + a.name +
                        "'; only symbolic attributes are supported");
    if (data.empty()) throw Error("redundancy estimate of an empty dataset is undefined");

    std::vector<std::size_t> offset(schema.size() + 1, 0);
    for (std::size_t a = 0; a < schema.size(); ++a)
        offset[a + 1] = offset[a] + schema[a].values.size();

    // counts[label][offset[a] + v]
    std::vector<std::size_t> counts[2] = {std::vector<std::size_t>(offset.back(), 0),
                                          std::vector<std::size_t>(offset.back(), 0)};
    std::size_t class_size[2] = {0, 0};
    for (ExampleIndex i = 0; i < data.size(); ++i) {
        auto e = data[i];
        const int c = static_cast<int>(e.label);
        ++class_size[c];
        for (std::size_t a = 0; a < schema.size(); ++a)
            ++counts[c][offset[a] + static_cast<std::size_t>(e.values[a])];
    }

    RedundancyReport report;
    const double n = static_cast<double>(data.size());
    for (int c = 0; c < 2; ++c) {
        if (class_size[c] == 0) continue;
        const double nc = static_cast<double>(class_size[c]);
        double h = 0.0;
        for (std::size_t k = 0; k < offset.back(); ++k) {
            if (counts[c][k] == 0) continue;
            const double q = static_cast<double>(counts[c][k]) / nc;
            h -= q * std::log2(q);
        }
        report.cpe += (nc / n) * h;
    }
    for (const auto& a : schema) report.max_cpe += std::log2(static_cast<double>(a.values.size()));
    report.red = report.max_cpe > 0.0 ? 1.0 - report.cpe / report.max_cpe : 1.0;
    return report;
}

}  // namespace winrule

#endif  // WINRULE_REDUNDANCY_HPP
