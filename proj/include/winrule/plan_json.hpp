#ifndef WINRULE_PLAN_JSON_HPP
#define WINRULE_PLAN_JSON_HPP

#include <fstream>
#include <string>

#include <json.hpp>

#include "winrule/harness.hpp"

// Experiment plans as JSON, e.g.
//   {
//     "data": {"krk": {"count": 10000, "seed": 7}},   or "data": "mushroom.csv"
//     "positive_class": "p",
//     "learner": "dos", "strategy": "integrative",
//     "sizes": [1000, 5000, 10000], "repeats": 10,
//     "init_size": 100, "max_inc_size": 50, "alpha": "inf", "seed": 1,
//     "eval": "full"
//   }
// Every key except "sizes" is optional.

namespace winrule {

inline ExperimentPlan plan_from_json(const nlohmann::json& j) {
    ExperimentPlan plan;
    try {
        if (j.contains("data")) {
            const auto& d = j.at("data");
            if (d.is_string()) {
                plan.source = FileSource{d.get<std::string>()};
            } else {
                const auto& k = d.at("krk");
                KrkSource src;
                src.count = k.value("count", src.count);
                src.seed = k.value("seed", src.seed);
                src.with_replacement = k.value("with_replacement", false);
                plan.source = src;
            }
        }
        if (j.contains("positive_class")) plan.positive_class = j.at("positive_class").get<std::string>();
        plan.learner = parse_learner(j.value("learner", std::string("dos")));
        plan.strategy = parse_strategy(j.value("strategy", std::string("none")));
        plan.sizes = j.at("sizes").get<std::vector<std::size_t>>();
        plan.repeats = j.value("repeats", plan.repeats);
        plan.window.init_size = j.value("init_size", plan.window.init_size);
        plan.window.max_inc_size = j.value("max_inc_size", plan.window.max_inc_size);
        if (j.contains("alpha")) {
            const auto& a = j.at("alpha");
            plan.window.alpha = a.is_string() ? Alpha::parse(a.get<std::string>())
                                              : Alpha(a.get<double>());
        }
        plan.window.seed = j.value("seed", plan.window.seed);
        plan.eval = EvalTarget::parse(j.value("eval", std::string("full")));
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("invalid plan: ") + e.what());
    }
    plan.validate();
    return plan;
}

inline ExperimentPlan load_plan(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open plan '" + path + "'");
    try {
        return plan_from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("plan '" + path + "' is not valid JSON: " + e.what());
    }
}

}  // namespace winrule

#endif  // WINRULE_PLAN_JSON_HPP
