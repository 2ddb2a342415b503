#ifndef WINRULE_TESTS_SUPPORT_HPP
#define WINRULE_TESTS_SUPPORT_HPP

#include <string>
#include <vector>

#include "winrule/winrule.hpp"

namespace winrule::test_support {

/// Random dataset with 1..6 attributes, symbolic or numeric, and 0..n_max rows.
inline Dataset random_dataset(Seed seed, std::size_t n_max = 200, bool symbolic_only = false) {
    Rng rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) { return lo + rng() % (hi - lo + 1); };
    std::vector<Attribute> attrs;
    const std::size_t width = pick(1, 6);
    for (std::size_t a = 0; a < width; ++a) {
        const std::string name = "x" + std::to_string(a);
        if (symbolic_only || rng() % 3 != 0) {
            std::vector<std::string> values;
            for (std::size_t v = 0, k = pick(1, 5); v < k; ++v) values.push_back("v" + std::to_string(v));
            attrs.push_back(Attribute::symbolic(name, values));
        } else {
            attrs.push_back(Attribute::numeric(name));
        }
    }
    Dataset d(Schema(attrs), "class", {"yes", "no"}, static_cast<int>(rng() % 2));
    const std::size_t n = pick(0, n_max);
    std::uniform_real_distribution<double> real(-100.0, 100.0);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row;
        for (const auto& attr : attrs) {
            if (attr.is_symbolic()) row.push_back(static_cast<double>(rng() % attr.values.size()));
            else if (rng() % 4 == 0) row.push_back(static_cast<double>(pick(0, 5)));
            else row.push_back(real(rng));
        }
        d.push_back(row, rng() % 2 ? Label::positive : Label::negative);
    }
    return d;
}

/// Sum of squared (observed - expected)^2 / expected.
inline double chi_square(const std::vector<std::size_t>& observed, double expected) {
    double chi = 0.0;
    for (auto o : observed) chi += (static_cast<double>(o) - expected) * (static_cast<double>(o) - expected) / expected;
    return chi;
}

}  // namespace winrule::test_support

#endif  // WINRULE_TESTS_SUPPORT_HPP
