#ifndef WINRULE_WINDOWING_HPP
#define WINRULE_WINDOWING_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "winrule/core.hpp"
#include "winrule/learners.hpp"
#include "winrule/random.hpp"

namespace winrule {

/// Tolerance multiplier for the window/total accuracy agreement test.
/// Infinity is a distinct state, not a large number.
class Alpha {
public:
    constexpr Alpha() = default;
    constexpr Alpha(double value) : value_(value) {}

    static constexpr Alpha infinity() {
        Alpha a;
        a.infinite_ = true;
        return a;
    }

    /// Accepts a non-negative decimal or "inf".
    static Alpha parse(std::string_view text) {
        if (text == "inf" || text == "infinity" || text == "Inf") return infinity();
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(std::string(text), &used);
        } catch (const std::exception&) {
            throw Error("alpha must be a non-negative number or 'inf', got '" +
                        std::string(text) + "'");
        }
        if (used != text.size() || !std::isfinite(v) || v < 0)
            throw Error("alpha must be a non-negative number or 'inf', got '" +
                        std::string(text) + "'");
        return Alpha(v);
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr double value() const {
        return infinite_ ? std::numeric_limits<double>::infinity() : value_;
    }

    std::string to_string() const {
        if (infinite_) return "inf";
        auto s = std::to_string(value_);
        s.erase(s.find_last_not_of('0') + 1);
        if (!s.empty() && s.back() == '.') s.pop_back();
        return s;
    }

    friend constexpr bool operator==(const Alpha&, const Alpha&) = default;

private:
    double value_ = 0.0;
    bool infinite_ = false;
};

struct WindowConfig {
    std::size_t init_size = 100;
    std::size_t max_inc_size = 50;
    Alpha alpha{0.0};
    Seed seed = 0;

    void validate() const {
        if (init_size < 1) throw Error("init_size must be at least 1");
        if (max_inc_size < 1) throw Error("max_inc_size must be at least 1");
        if (!alpha.is_infinite() && !(alpha.value() >= 0.0))
            throw Error("alpha must be non-negative");
    }
};

/// Snapshot handed to observers after each iteration.
struct WindowState {
    IndexList window;      // sorted
    IndexList test_queue;  // scan order (basic, integrative)
    Theory old_rules;      // retained (integrative) or accepted (noise-tolerant) rules
    IndexList reserved;    // removed from the window by retained rules (integrative)
    IndexList remaining;   // not yet explained by accepted rules (noise-tolerant)
    std::size_t iteration = 0;
};

struct IterationTrace {
    std::size_t iteration = 0;
    std::size_t window_size = 0;  // window at the learner call
    std::size_t new_examples = 0;
    std::size_t rules_learned = 0;
    std::size_t rules_retained = 0;
    std::size_t learner_input_size = 0;

    friend bool operator==(const IterationTrace&, const IterationTrace&) = default;
};

struct WindowingResult {
    Theory theory;
    std::vector<IterationTrace> trace;

    std::size_t iterations() const { return trace.size(); }

    /// Sum of the learner's input sizes over all iterations.
    std::size_t processed_examples() const {
        std::size_t total = 0;
        for (const auto& t : trace) total += t.learner_input_size;
        return total;
    }

    std::size_t final_window() const { return trace.empty() ? 0 : trace.back().window_size; }

    std::size_t peak_window() const {
        std::size_t peak = 0;
        for (const auto& t : trace) peak = std::max(peak, t.window_size);
        return peak;
    }
};

using WindowObserver = std::function<void(const WindowState&)>;

struct RuleStats {
    double acc_win = 0.0;
    std::size_t n_win = 0;
    double acc_tot = 0.0;
    std::size_t n_tot = 0;
    double se_win = 0.0;
    double se_tot = 0.0;
    double da = 0.0;
};

/// Standard error of an accuracy estimate from n examples.
inline double standard_error(double acc, std::size_t n) {
    if (n == 0) throw Error("standard error needs at least one example");
    return std::sqrt(acc * (1.0 - acc) / static_cast<double>(n));
}

/// Significance gate for a rule learned from the window.
///
/// Accuracies are precisions over covered examples. Accepts iff
///   acc_win - SE(acc_win) > da  and  |acc_win - acc_tot| <= alpha * SE(acc_tot).
/// Rules covering nothing in the window or the training set are rejected.
inline std::pair<bool, RuleStats> significant(const Rule& rule, const Dataset& data,
                                              std::span<const ExampleIndex> window,
                                              std::span<const ExampleIndex> training, Alpha alpha,
                                              double default_accuracy) {
    RuleStats s;
    s.da = default_accuracy;
    const CoverageStats win = coverage(rule, data, window);
    const CoverageStats tot = coverage(rule, data, training);
    s.n_win = win.total();
    s.n_tot = tot.total();
    if (s.n_win == 0 || s.n_tot == 0) return {false, s};
    s.acc_win = static_cast<double>(win.p) / static_cast<double>(s.n_win);
    s.acc_tot = static_cast<double>(tot.p) / static_cast<double>(s.n_tot);
    s.se_win = standard_error(s.acc_win, s.n_win);
    s.se_tot = standard_error(s.acc_tot, s.n_tot);
    if (!(s.acc_win - s.se_win > s.da)) return {false, s};
    if (alpha.is_infinite()) return {true, s};
    return {std::abs(s.acc_win - s.acc_tot) <= alpha.value() * s.se_tot, s};
}

namespace detail {

inline IndexList flagged(const std::vector<char>& flags) {
    IndexList out;
    for (std::size_t i = 0; i < flags.size(); ++i)
        if (flags[i]) out.push_back(i);
    return out;
}

struct ScanResult {
    IndexList new_window;
    IndexList next_queue;
};

// One test phase: scan the queue, collect up to max_inc misclassified
// examples, then rotate the already-tested ones to the back.
inline ScanResult scan_test_queue(const Dataset& data, const Theory& theory,
                                  const IndexList& queue, std::size_t max_inc) {
    ScanResult r;
    IndexList old_test;
    std::size_t pos = 0;
    while (pos < queue.size()) {
        const ExampleIndex e = queue[pos++];
        if (classify(theory, data[e]) != data.label(e)) r.new_window.push_back(e);
        else old_test.push_back(e);
        if (r.new_window.size() == max_inc) break;
    }
    r.next_queue.assign(queue.begin() + static_cast<std::ptrdiff_t>(pos), queue.end());
    r.next_queue.insert(r.next_queue.end(), old_test.begin(), old_test.end());
    return r;
}

inline void check_init_size(const Dataset& data, const WindowConfig& config) {
    config.validate();
    if (config.init_size > data.size())
        throw Error("init_size (" + std::to_string(config.init_size) +
                    ") exceeds the number of examples (" + std::to_string(data.size()) + ")");
}

}  // namespace detail

/// Classic windowing: grow the window by at most max_inc_size misclassified
/// examples per iteration until the theory misclassifies nothing it tests.
template <Learner L>
WindowingResult basic_windowing(const Dataset& data, const L& learner, const WindowConfig& config,
                                const WindowObserver& observer = {}) {
    detail::check_init_size(data, config);
    const auto all = data.all_indices();
    auto [initial, queue] =
        random_partition(all, config.init_size, derive_seed(config.seed, stream::window));
    std::vector<char> in_window(data.size(), 0);
    for (auto i : initial) in_window[i] = 1;
    const Seed learner_seed = derive_seed(config.seed, stream::learner);

    WindowingResult result;
    for (std::size_t it = 1;; ++it) {
        const IndexList window = detail::flagged(in_window);
        result.theory = learner(data, std::span<const ExampleIndex>(window), derive_seed(learner_seed, it));
        auto scan = detail::scan_test_queue(data, result.theory, queue, config.max_inc_size);
        queue = std::move(scan.next_queue);
        for (auto e : scan.new_window) in_window[e] = 1;

        result.trace.push_back({it, window.size(), scan.new_window.size(),
                                result.theory.size(), 0, window.size()});
        if (observer)
            observer(WindowState{detail::flagged(in_window), queue, {}, {}, {}, it});
        if (scan.new_window.empty()) break;
    }
    return result;
}

/// Integrative windowing: rules consistent with the newly collected
/// examples are retained across iterations and their covered examples leave
/// the window. Retained rules are re-tested, never re-learned.
template <Learner L>
WindowingResult integrative_windowing(const Dataset& data, const L& learner,
                                      const WindowConfig& config,
                                      const WindowObserver& observer = {}) {
    detail::check_init_size(data, config);
    const auto all = data.all_indices();
    auto [initial, queue] =
        random_partition(all, config.init_size, derive_seed(config.seed, stream::window));
    std::vector<char> in_window(data.size(), 0), in_reserve(data.size(), 0);
    for (auto i : initial) in_window[i] = 1;
    const Seed learner_seed = derive_seed(config.seed, stream::learner);
    Theory old_rules;

    WindowingResult result;
    for (std::size_t it = 1;; ++it) {
        const IndexList window = detail::flagged(in_window);
        const Theory new_rules = learner(data, std::span<const ExampleIndex>(window), derive_seed(learner_seed, it));
        Theory theory = new_rules;
        for (const auto& r : old_rules.rules) theory.add(r);

        auto scan = detail::scan_test_queue(data, theory, queue, config.max_inc_size);
        queue = std::move(scan.next_queue);
        for (auto e : scan.new_window) in_window[e] = 1;
        for (std::size_t i = 0; i < in_reserve.size(); ++i)
            if (in_reserve[i]) {
                in_window[i] = 1;
                in_reserve[i] = 0;
            }

        old_rules = Theory{};
        for (const auto& rule : theory.rules) {
            const bool consistent =
                std::none_of(scan.new_window.begin(), scan.new_window.end(), [&](ExampleIndex e) {
                    return data.label(e) == Label::negative && rule.covers(data[e].values);
                });
            if (!consistent) continue;
            old_rules.add(rule);
            for (std::size_t i = 0; i < in_window.size(); ++i)
                if (in_window[i] && rule.covers(data[i].values)) {
                    in_window[i] = 0;
                    in_reserve[i] = 1;
                }
        }

        result.theory = std::move(theory);
        result.trace.push_back({it, window.size(), scan.new_window.size(), new_rules.size(),
                                old_rules.size(), window.size()});
        if (observer)
            observer(WindowState{detail::flagged(in_window), queue, old_rules,
                                 detail::flagged(in_reserve), {}, it});
        if (scan.new_window.empty()) break;
    }
    return result;
}

/// Noise-tolerant integrative windowing.
///
/// Each learned rule is checked with `significant` against the current
/// window and the examples not yet explained. Significant rules join the
/// theory and their covered examples are removed for good. Examples outside
/// the window covered by insignificant rules, plus uncovered positives
/// outside the window, form the candidates; max_inc_size of them are added.
/// When the learner finds no rule the window is doubled from the remaining
/// examples. Default accuracy is that of the full input, fixed at the start.
template <Learner L>
WindowingResult noise_tolerant_windowing(const Dataset& data, const L& learner,
                                         const WindowConfig& config,
                                         const WindowObserver& observer = {}) {
    detail::check_init_size(data, config);
    const auto all = data.all_indices();
    auto initial =
        random_partition(all, config.init_size, derive_seed(config.seed, stream::window)).first;
    std::vector<char> in_window(data.size(), 0), remaining(data.size(), 1);
    for (auto i : initial) in_window[i] = 1;
    const double da = data.default_accuracy();
    const Seed learner_seed = derive_seed(config.seed, stream::learner);
    const Seed resample_seed = derive_seed(config.seed, stream::resample);

    WindowingResult result;
    for (std::size_t it = 1;; ++it) {
        const IndexList window = detail::flagged(in_window);
        const IndexList examples = detail::flagged(remaining);
        const Theory new_rules = learner(data, std::span<const ExampleIndex>(window), derive_seed(learner_seed, it));
        IterationTrace trace{it, window.size(), 0, new_rules.size(), 0, window.size()};

        if (new_rules.empty()) {
            // Completeness check: double the window from the unexplained examples.
            IndexList pool;
            for (auto e : examples)
                if (!in_window[e]) pool.push_back(e);
            bool done = pool.empty();
            if (!done) {
                const std::size_t grow = std::max(window.size(), config.max_inc_size);
                for (auto e : resample_candidates(pool, grow, derive_seed(resample_seed, it)))
                    in_window[e] = 1;
                trace.new_examples = std::min(grow, pool.size());
            }
            result.trace.push_back(trace);
            if (observer)
                observer(WindowState{detail::flagged(in_window), {}, result.theory, {},
                                     detail::flagged(remaining), it});
            if (done) break;
            continue;
        }

        std::vector<char> next_window = in_window, next_remaining = remaining;
        std::vector<char> candidate(data.size(), 0), covered_by_new(data.size(), 0);
        for (const auto& rule : new_rules.rules) {
            const auto [ok, stats] = significant(rule, data, window, examples, config.alpha, da);
            for (auto e : examples) {
                if (!rule.covers(data[e].values)) continue;
                covered_by_new[e] = 1;
                if (ok) {
                    next_window[e] = 0;
                    next_remaining[e] = 0;
                } else if (!in_window[e]) {
                    candidate[e] = 1;
                }
            }
            if (ok) {
                result.theory.add(rule);
                ++trace.rules_retained;
            }
        }
        for (auto e : examples)
            if (!covered_by_new[e] && !in_window[e] && data.label(e) == Label::positive)
                candidate[e] = 1;

        IndexList candidates;
        for (auto e : examples)
            if (candidate[e] && next_remaining[e]) candidates.push_back(e);
        const IndexList added =
            candidates.empty()
                ? IndexList{}
                : resample_candidates(candidates, config.max_inc_size,
                                      derive_seed(resample_seed, it));
        for (auto e : added) next_window[e] = 1;
        in_window = std::move(next_window);
        remaining = std::move(next_remaining);

        trace.new_examples = added.size();
        result.trace.push_back(trace);
        if (observer)
            observer(WindowState{detail::flagged(in_window), {}, result.theory, {},
                                 detail::flagged(remaining), it});
        if (candidates.empty()) break;
    }
    return result;
}

}  // namespace winrule

#endif  // WINRULE_WINDOWING_HPP
