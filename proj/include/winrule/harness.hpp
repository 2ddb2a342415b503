#ifndef WINRULE_HARNESS_HPP
#define WINRULE_HARNESS_HPP

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "winrule/core.hpp"
#include "winrule/csv.hpp"
#include "winrule/krk.hpp"
#include "winrule/learners.hpp"
#include "winrule/postprocess.hpp"
#include "winrule/sampling.hpp"
#include "winrule/windowing.hpp"

namespace winrule {

enum class LearnerKind { dos, irip };
enum class Strategy { none, basic, integrative, noise_tolerant };

inline LearnerKind parse_learner(std::string_view s) {
    if (s == "dos") return LearnerKind::dos;
    if (s == "irip") return LearnerKind::irip;
    throw Error("unknown learner '" + std::string(s) + "' (expected dos or irip)");
}

inline Strategy parse_strategy(std::string_view s) {
    if (s == "none") return Strategy::none;
    if (s == "basic") return Strategy::basic;
    if (s == "integrative") return Strategy::integrative;
    if (s == "noise-tolerant") return Strategy::noise_tolerant;
    throw Error("unknown strategy '" + std::string(s) +
                "' (expected none, basic, integrative or noise-tolerant)");
}

inline const char* to_string(LearnerKind k) { return k == LearnerKind::dos ? "dos" : "irip"; }

inline const char* to_string(Strategy s) {
    switch (s) {
        case Strategy::none: return "none";
        case Strategy::basic: return "basic";
        case Strategy::integrative: return "integrative";
        case Strategy::noise_tolerant: return "noise-tolerant";
    }
    return "?";
}

struct KrkSource {
    std::size_t count = krk::position_count;
    Seed seed = 0;
    bool with_replacement = false;
};

struct FileSource {
    std::string path;
};

using DataSource = std::variant<FileSource, KrkSource>;

/// Evaluate on the dataset the training subsets are drawn from, or on a file.
struct EvalTarget {
    std::optional<std::string> file;

    static EvalTarget parse(std::string_view s) {
        if (s == "full") return {};
        if (s.starts_with("file:") && s.size() > 5) return {std::string(s.substr(5))};
        throw Error("--eval expects 'full' or 'file:<path>', got '" + std::string(s) + "'");
    }
};

struct ExperimentPlan {
    DataSource source = KrkSource{};
    std::optional<std::string> positive_class;
    LearnerKind learner = LearnerKind::dos;
    Strategy strategy = Strategy::none;
    std::vector<std::size_t> sizes;
    std::size_t repeats = 10;
    WindowConfig window;  // window.seed is the base seed
    EvalTarget eval;

    void validate() const {
        if (repeats < 1) throw Error("repeats must be at least 1");
        if (sizes.empty()) throw Error("no training sizes given");
        for (std::size_t k = 0; k < sizes.size(); ++k) {
            if (sizes[k] < 1) throw Error("training sizes must be positive");
            if (k > 0 && sizes[k] <= sizes[k - 1])
                throw Error("training sizes must be strictly ascending");
        }
        if (strategy == Strategy::noise_tolerant && learner == LearnerKind::dos)
            throw Error("the noise-tolerant strategy needs a noise-tolerant learner (irip), not dos");
        window.validate();
    }
};

struct RunRecord {
    std::size_t size = 0;
    std::size_t repeat = 0;
    Seed seed = 0;
    double accuracy = 0.0;
    std::size_t iterations = 0;
    std::size_t processed_examples = 0;
    std::size_t final_window = 0;
    std::size_t rules = 0;
    double wall_time = 0.0;  // seconds
};

/// Result of one learner/strategy run on a training set.
struct LearnOutcome {
    Theory theory;  // after redundant-rule removal
    WindowingResult windowing;
};

inline Dataset load_source(const DataSource& source,
                           const std::optional<std::string>& positive_class = {}) {
    if (const auto* f = std::get_if<FileSource>(&source)) return load_csv(f->path, positive_class);
    const auto& k = std::get<KrkSource>(source);
    if (k.count == krk::position_count && !k.with_replacement) return krk::enumeration();
    return krk::generate(k.count, k.seed, k.with_replacement);
}

/// Runs learner/strategy on `training` and removes redundant rules. For the
/// plain learner the trace holds one iteration over the whole training set.
inline LearnOutcome learn(const Dataset& training, LearnerKind learner, Strategy strategy,
                          const WindowConfig& config) {
    if (strategy == Strategy::noise_tolerant && learner == LearnerKind::dos)
        throw Error("the noise-tolerant strategy needs a noise-tolerant learner (irip), not dos");
    auto run = [&](const auto& base) -> WindowingResult {
        switch (strategy) {
            case Strategy::basic: return basic_windowing(training, base, config);
            case Strategy::integrative: return integrative_windowing(training, base, config);
            case Strategy::noise_tolerant: return noise_tolerant_windowing(training, base, config);
            case Strategy::none: break;
        }
        WindowingResult r;
        const auto all = training.all_indices();
        r.theory = base(training, std::span<const ExampleIndex>(all),
                        derive_seed(config.seed, stream::learner));
        r.trace.push_back({1, training.size(), 0, r.theory.size(), 0, training.size()});
        return r;
    };
    LearnOutcome out;
    out.windowing = learner == LearnerKind::dos ? run(DosLearner{}) : run(IripLearner{});
    out.theory = remove_redundant_rules(out.windowing.theory, training);
    return out;
}

/// Every (size, repeat) run of the plan over `data`, ordered by size then
/// repeat. Run seed = base seed + repeat; the training subset and all
/// stochastic choices inside the run derive from it.
inline std::vector<RunRecord> run_plan(const ExperimentPlan& plan, const Dataset& data,
                                       const Dataset* eval = nullptr) {
    plan.validate();
    for (auto s : plan.sizes)
        if (s > data.size())
            throw Error("training size " + std::to_string(s) + " exceeds the dataset size " +
                        std::to_string(data.size()));
    const Dataset& target = eval ? *eval : data;
    if (target.schema() != data.schema())
        throw Error("evaluation data does not share the training schema");

    std::vector<RunRecord> records;
    for (auto size : plan.sizes) {
        for (std::size_t rep = 0; rep < plan.repeats; ++rep) {
            const auto start = std::chrono::steady_clock::now();
            RunRecord rec;
            rec.size = size;
            rec.repeat = rep;
            rec.seed = plan.window.seed + rep;
            const Dataset training =
                size == data.size()
                    ? data
                    : data.subset(sample_indices(data.size(), size,
                                                 derive_seed(rec.seed, stream::subset))
                                      .first);
            WindowConfig config = plan.window;
            config.seed = rec.seed;
            const auto outcome = learn(training, plan.learner, plan.strategy, config);
            rec.accuracy = accuracy(outcome.theory, target);
            rec.iterations = outcome.windowing.iterations();
            rec.processed_examples = outcome.windowing.processed_examples();
            rec.final_window = outcome.windowing.final_window();
            rec.rules = outcome.theory.size();
            rec.wall_time =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            records.push_back(rec);
        }
    }
    return records;
}

inline std::vector<RunRecord> run_plan(const ExperimentPlan& plan) {
    const Dataset data = load_source(plan.source, plan.positive_class);
    if (plan.eval.file) {
        const Dataset eval = load_csv(*plan.eval.file, plan.positive_class);
        return run_plan(plan, data, &eval);
    }
    return run_plan(plan, data);
}

inline constexpr const char* result_columns =
    "size,repeat,seed,accuracy,iterations,processed_examples,final_window,rules,wall_time";

/// Data rows in record order, then one summary row per size. A summary row
/// has repeat = "summary", an empty seed, and `mean;stddev` (sample standard
/// deviation) in every metric column.
inline void write_results(const std::vector<RunRecord>& records, std::ostream& out) {
    out << result_columns << '\n';
    auto num = [](double v) { return format_number(v); };
    for (const auto& r : records)
        out << r.size << ',' << r.repeat << ',' << r.seed << ',' << num(r.accuracy) << ','
            << r.iterations << ',' << r.processed_examples << ',' << r.final_window << ','
            << r.rules << ',' << num(r.wall_time) << '\n';

    std::map<std::size_t, std::vector<const RunRecord*>> by_size;
    for (const auto& r : records) by_size[r.size].push_back(&r);
    for (const auto& [size, group] : by_size) {
        auto summary = [&](auto field) {
            double mean = 0.0;
            for (const auto* r : group) mean += static_cast<double>(field(*r));
            mean /= static_cast<double>(group.size());
            double ss = 0.0;
            for (const auto* r : group) {
                const double d = static_cast<double>(field(*r)) - mean;
                ss += d * d;
            }
            const double sd =
                group.size() > 1 ? std::sqrt(ss / static_cast<double>(group.size() - 1)) : 0.0;
            return num(mean) + ";" + num(sd);
        };
        out << size << ",summary,," << summary([](const RunRecord& r) { return r.accuracy; })
            << ',' << summary([](const RunRecord& r) { return r.iterations; }) << ','
            << summary([](const RunRecord& r) { return r.processed_examples; }) << ','
            << summary([](const RunRecord& r) { return r.final_window; }) << ','
            << summary([](const RunRecord& r) { return r.rules; }) << ','
            << summary([](const RunRecord& r) { return r.wall_time; }) << '\n';
    }
}

inline void emit_results(const std::vector<RunRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write results to '" + path + "'");
    write_results(records, out);
    if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace winrule

#endif  // WINRULE_HARNESS_HPP
