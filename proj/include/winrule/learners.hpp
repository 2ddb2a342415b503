#ifndef WINRULE_LEARNERS_HPP
#define WINRULE_LEARNERS_HPP

#include <algorithm>
#include <cmath>
#include <concepts>
#include <functional>
#include <iostream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "winrule/core.hpp"
#include "winrule/random.hpp"

namespace winrule {

/// Destination for non-fatal diagnostics (dropped contradictory examples).
/// Defaults to stderr; tests and batch runs may silence it.
inline std::function<void(std::string_view)>& warning_sink() {
    static std::function<void(std::string_view)> sink = [](std::string_view msg) {
        std::cerr << "warning: " << msg << '\n';
    };
    return sink;
}

inline void warn(std::string_view msg) {
    if (auto& sink = warning_sink()) sink(msg);
}

/// FOIL information gain of refining a rule from `base` to `refined` coverage.
/// Zero when the refinement covers no positives.
inline double foil_gain(CoverageStats base, CoverageStats refined) {
    if (base.p == 0) throw Error("foil_gain: the rule under refinement covers no positives");
    if (refined.p == 0) return 0.0;
    const double p0 = static_cast<double>(base.p), n0 = static_cast<double>(base.n);
    const double p1 = static_cast<double>(refined.p), n1 = static_cast<double>(refined.n);
    return p1 * (std::log2(p1 / (p1 + n1)) - std::log2(p0 / (p0 + n0)));
}

struct Candidate {
    Condition condition;
    CoverageStats stats;  // coverage of rule + condition
};

namespace detail {

inline double midpoint(double lo, double hi) {
    double m = lo + (hi - lo) / 2.0;
    return m < hi ? m : lo;
}

struct ValueCount {
    double value;
    std::size_t p;
    std::size_t n;
};

}  // namespace detail

/// Every candidate refinement of `rule` with its coverage over `pos` and `neg`.
///
/// Order is canonical and used for tie-breaking: attributes in schema order;
/// symbolic equality tests in declaration order; for numeric attributes the
/// thresholds ascending, each yielding `<= t` then `> t`. A threshold lies
/// halfway between adjacent distinct values whose class distributions are
/// not the same single class. Conditions already in `rule` are skipped.
inline std::vector<Candidate> evaluate_candidates(const Dataset& data,
                                                  std::span<const ExampleIndex> pos,
                                                  std::span<const ExampleIndex> neg,
                                                  const Rule& rule) {
    const Schema& schema = data.schema();
    std::vector<Candidate> out;

    // Symbolic attributes: one histogram pass over all covered examples.
    std::vector<std::size_t> offset(schema.size() + 1, 0);
    for (std::size_t a = 0; a < schema.size(); ++a)
        offset[a + 1] = offset[a] + (schema[a].is_symbolic() ? schema[a].values.size() : 0);
    std::vector<CoverageStats> hist(offset.back());
    std::vector<std::size_t> symbolic_attrs;
    for (std::size_t a = 0; a < schema.size(); ++a)
        if (schema[a].is_symbolic()) symbolic_attrs.push_back(a);

    auto tally = [&](std::span<const ExampleIndex> idx, bool positive) {
        for (auto i : idx) {
            auto row = data[i].values;
            for (auto a : symbolic_attrs) {
                auto& h = hist[offset[a] + static_cast<std::size_t>(row[a])];
                (positive ? h.p : h.n)++;
            }
        }
    };
    tally(pos, true);
    tally(neg, false);

    std::vector<detail::ValueCount> column;
    for (std::size_t a = 0; a < schema.size(); ++a) {
        const auto& attr = schema[a];
        if (attr.is_symbolic()) {
            for (std::size_t v = 0; v < attr.values.size(); ++v) {
                auto c = Condition::equals(a, static_cast<int>(v));
                if (!rule.contains(c)) out.push_back({c, hist[offset[a] + v]});
            }
            continue;
        }
        column.clear();
        column.reserve(pos.size() + neg.size());
        for (auto i : pos) column.push_back({data.value(i, a), 1, 0});
        for (auto i : neg) column.push_back({data.value(i, a), 0, 1});
        std::sort(column.begin(), column.end(),
                  [](const auto& x, const auto& y) { return x.value < y.value; });
        // Collapse to distinct values.
        std::size_t groups = 0;
        for (std::size_t k = 0; k < column.size(); ++k) {
            if (groups > 0 && column[groups - 1].value == column[k].value) {
                column[groups - 1].p += column[k].p;
                column[groups - 1].n += column[k].n;
            } else {
                column[groups++] = column[k];
            }
        }
        column.resize(groups);
        const CoverageStats total{pos.size(), neg.size()};
        CoverageStats below;
        for (std::size_t g = 0; g + 1 < column.size(); ++g) {
            below.p += column[g].p;
            below.n += column[g].n;
            const auto& lo = column[g];
            const auto& hi = column[g + 1];
            const bool same_pure_class = (lo.n == 0 && hi.n == 0) || (lo.p == 0 && hi.p == 0);
            if (same_pure_class) continue;
            const double t = detail::midpoint(lo.value, hi.value);
            auto le = Condition::less_equal(a, t);
            auto gt = Condition::greater(a, t);
            if (!rule.contains(le)) out.push_back({le, below});
            if (!rule.contains(gt)) out.push_back({gt, {total.p - below.p, total.n - below.n}});
        }
    }
    return out;
}

/// Candidate conditions for refining `rule`, computed over `examples`.
inline std::vector<Condition> candidate_conditions(const Dataset& data,
                                                   std::span<const ExampleIndex> examples,
                                                   const Rule& rule) {
    IndexList pos, neg;
    for (auto i : examples) (data.label(i) == Label::positive ? pos : neg).push_back(i);
    std::vector<Condition> out;
    for (const auto& c : evaluate_candidates(data, pos, neg, rule)) out.push_back(c.condition);
    return out;
}

inline std::vector<Condition> candidate_conditions(const Dataset& data, const Rule& rule = {}) {
    auto all = data.all_indices();
    return candidate_conditions(data, all, rule);
}

/// A grown rule with the positives and negatives it still covers.
struct GrownRule {
    Rule rule;
    IndexList pos;
    IndexList neg;
};

/// Greedy FOIL-gain specialization until no negatives are covered.
///
/// Only candidates that keep at least one positive and strictly reduce the
/// covered negatives are eligible; when none is, growing stops with n > 0.
/// That happens only when the covered examples share one feature vector.
inline GrownRule grow_rule_dos(const Dataset& data, std::span<const ExampleIndex> positives,
                               std::span<const ExampleIndex> negatives) {
    if (positives.empty()) throw Error("grow_rule_dos: no positive examples to cover");
    GrownRule g{Rule{}, IndexList(positives.begin(), positives.end()),
                IndexList(negatives.begin(), negatives.end())};
    while (!g.neg.empty()) {
        const CoverageStats base{g.pos.size(), g.neg.size()};
        const auto candidates = evaluate_candidates(data, g.pos, g.neg, g.rule);
        const Candidate* best = nullptr;
        double best_gain = 0.0;
        for (const auto& c : candidates) {
            if (c.stats.p == 0 || c.stats.n >= base.n) continue;
            double gain = foil_gain(base, c.stats);
            if (best == nullptr || gain > best_gain) {
                best = &c;
                best_gain = gain;
            }
        }
        if (best == nullptr) break;
        const Condition cond = best->condition;
        g.rule.add(cond);
        auto keep = [&](IndexList& idx) {
            std::erase_if(idx, [&](ExampleIndex i) { return !cond.holds(data[i].values); });
        };
        keep(g.pos);
        keep(g.neg);
    }
    return g;
}

inline void split_by_label(const Dataset& data, std::span<const ExampleIndex> indices,
                           IndexList& pos, IndexList& neg) {
    pos.clear();
    neg.clear();
    for (auto i : indices) (data.label(i) == Label::positive ? pos : neg).push_back(i);
}

/// DOS: covering loop over grow_rule_dos, no stopping criterion.
///
/// Negatives are always all negatives of the input. Positives that cannot be
/// separated from identical negatives are dropped with a warning.
inline Theory induce_dos(const Dataset& data, std::span<const ExampleIndex> indices) {
    IndexList pos, neg;
    split_by_label(data, indices, pos, neg);
    Theory theory;
    std::size_t dropped = 0;
    while (!pos.empty()) {
        GrownRule g = grow_rule_dos(data, pos, neg);
        const auto& gone = g.pos;
        if (g.neg.empty()) theory.add(g.rule);
        else dropped += gone.size();
        // g.pos is a subsequence of pos, both in the same order.
        IndexList rest;
        rest.reserve(pos.size() - gone.size());
        std::size_t k = 0;
        for (auto i : pos) {
            if (k < gone.size() && gone[k] == i) ++k;
            else rest.push_back(i);
        }
        pos = std::move(rest);
    }
    if (dropped > 0)
        warn("DOS dropped " + std::to_string(dropped) +
             " positive example(s) indistinguishable from negatives");
    return theory;
}

inline Theory induce_dos(const Dataset& data) {
    auto all = data.all_indices();
    return induce_dos(data, all);
}

/// Pruning-set value (p - n) / (p + n); -1 when nothing is covered.
inline double pruning_value(CoverageStats s) {
    if (s.total() == 0) return -1.0;
    return (static_cast<double>(s.p) - static_cast<double>(s.n)) / static_cast<double>(s.total());
}

/// Greedily deletes single conditions while the pruning-set value does not
/// decrease. Among deletions the best value wins, ties to the earliest.
inline Rule prune_rule(const Dataset& data, Rule rule, std::span<const ExampleIndex> prune_set) {
    std::vector<std::size_t> failures(prune_set.size());
    std::vector<std::size_t> failed_at(prune_set.size());
    for (;;) {
        const auto& conds = rule.conditions();
        if (conds.empty()) break;
        CoverageStats current;
        for (std::size_t k = 0; k < prune_set.size(); ++k) {
            auto e = data[prune_set[k]];
            failures[k] = 0;
            for (std::size_t c = 0; c < conds.size(); ++c)
                if (!conds[c].holds(e.values)) {
                    ++failures[k];
                    failed_at[k] = c;
                }
            if (failures[k] == 0) (e.positive() ? current.p : current.n)++;
        }
        // Deleting condition c uncovers nothing new except examples failing c alone.
        std::vector<CoverageStats> after(conds.size(), current);
        for (std::size_t k = 0; k < prune_set.size(); ++k)
            if (failures[k] == 1)
                (data.label(prune_set[k]) == Label::positive ? after[failed_at[k]].p
                                                             : after[failed_at[k]].n)++;
        const double value = pruning_value(current);
        std::size_t best = 0;
        double best_value = pruning_value(after[0]);
        for (std::size_t c = 1; c < conds.size(); ++c) {
            double v = pruning_value(after[c]);
            if (v > best_value) {
                best = c;
                best_value = v;
            }
        }
        if (best_value < value) break;
        rule = rule.without(best);
    }
    return rule;
}

/// I-RIP: grow on a random 2/3, prune on the other 1/3, stop once the best
/// pruned rule's pruning-set precision is at most 0.5.
///
/// The grow/prune split is redrawn before every rule. Accepted rules remove
/// every example they cover, positive or negative.
inline Theory induce_irip(const Dataset& data, std::span<const ExampleIndex> indices, Seed seed) {
    IndexList work(indices.begin(), indices.end());
    Theory theory;
    IndexList gpos, gneg;
    for (std::uint64_t round = 0;; ++round) {
        const bool any_positive = std::any_of(work.begin(), work.end(), [&](ExampleIndex i) {
            return data.label(i) == Label::positive;
        });
        if (!any_positive) break;
        const auto grow_size = static_cast<std::size_t>(
            std::llround(2.0 * static_cast<double>(work.size()) / 3.0));
        auto [grow, prune] = random_partition(work, grow_size, derive_seed(seed, round));
        // Canonical order so the learned rule does not depend on the shuffle.
        std::sort(grow.begin(), grow.end());
        std::sort(prune.begin(), prune.end());
        split_by_label(data, grow, gpos, gneg);
        if (gpos.empty()) break;
        Rule rule = prune_rule(data, grow_rule_dos(data, gpos, gneg).rule, prune);
        const CoverageStats s = coverage(rule, data, prune);
        if (s.total() == 0 || 2 * s.p <= s.total()) break;
        theory.add(rule);
        std::erase_if(work, [&](ExampleIndex i) { return rule.covers(data[i].values); });
    }
    return theory;
}

inline Theory induce_irip(const Dataset& data, Seed seed) {
    auto all = data.all_indices();
    return induce_irip(data, all, seed);
}

/// Base learner interface used by the windowing strategies.
template <typename L>
concept Learner = requires(const L& learner, const Dataset& data,
                           std::span<const ExampleIndex> indices, Seed seed) {
    { learner(data, indices, seed) } -> std::convertible_to<Theory>;
};

struct DosLearner {
    Theory operator()(const Dataset& data, std::span<const ExampleIndex> indices, Seed) const {
        return induce_dos(data, indices);
    }
};

struct IripLearner {
    Theory operator()(const Dataset& data, std::span<const ExampleIndex> indices,
                      Seed seed) const {
        return induce_irip(data, indices, seed);
    }
};

}  // namespace winrule

#endif  // WINRULE_LEARNERS_HPP
