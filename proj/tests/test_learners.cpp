#include <gtest/gtest.h>

#include <algorithm>
#include <string>

#include "support.hpp"
#include "winrule/winrule.hpp"

using namespace winrule;

namespace {

struct QuietWarnings : ::testing::Environment {
    void SetUp() override { warning_sink() = {}; }
};
const auto* quiet = ::testing::AddGlobalTestEnvironment(new QuietWarnings);

Dataset numeric_toy() {
    Dataset d(Schema({Attribute::numeric("x")}), "class", {"yes", "no"});
    d.push_back(std::vector<double>{1}, Label::positive);
    d.push_back(std::vector<double>{2}, Label::positive);
    d.push_back(std::vector<double>{3}, Label::negative);
    return d;
}

Dataset separable() {
    Schema s({Attribute::symbolic("a", {"f", "t"}), Attribute::symbolic("b", {"f", "t"})});
    Dataset d(s, "class", {"yes", "no"});
    for (int i = 0; i < 20; ++i)
        d.push_back(std::vector<double>{double(i % 2), double((i / 2) % 2)},
                    i % 2 ? Label::positive : Label::negative);
    return d;
}

Dataset random_labels(std::size_t n, Seed seed) {
    std::vector<Attribute> attrs;
    for (int a = 0; a < 6; ++a) attrs.push_back(Attribute::symbolic("a" + std::to_string(a), {"0", "1", "2"}));
    Dataset d(Schema(attrs), "class", {"yes", "no"});
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row;
        for (int a = 0; a < 6; ++a) row.push_back(double(rng() % 3));
        d.push_back(row, rng() % 2 ? Label::positive : Label::negative);
    }
    return d;
}

std::size_t relational_rule_for(const Rule& rule, const Dataset& full) {
    // Index (1-based) of the reference rule whose first-match examples the
    // rule overlaps most, measured over the enumeration.
    std::array<std::size_t, krk::rule_count + 1> hits{};
    for (std::uint32_t id = 0; id < krk::position_count; ++id)
        if (rule.covers(full[id].values)) ++hits[static_cast<std::size_t>(krk::first_rule(krk::position(id)))];
    return static_cast<std::size_t>(std::max_element(hits.begin(), hits.end()) - hits.begin());
}

}  // namespace

TEST(FoilGain, Examples) {
    EXPECT_DOUBLE_EQ(foil_gain({10, 10}, {10, 10}), 0.0);
    EXPECT_DOUBLE_EQ(foil_gain({10, 10}, {5, 0}), 5.0);
    EXPECT_DOUBLE_EQ(foil_gain({8, 8}, {0, 0}), 0.0);
    EXPECT_THROW(foil_gain({0, 4}, {0, 1}), Error);
}

TEST(FoilGainProperty, PositiveExactlyWhenPurityIncreases) {
    Rng rng(11);
    for (int k = 0; k < 5000; ++k) {
        const std::size_t p0 = 1 + rng() % 50, n0 = rng() % 50;
        const std::size_t p1 = rng() % (p0 + 1), n1 = rng() % (n0 + 1);
        const double gain = foil_gain({p0, n0}, {p1, n1});
        const bool purer = p1 > 0 && p1 * (p0 + n0) > p0 * (p1 + n1);
        EXPECT_EQ(gain > 1e-12, purer) << p0 << ' ' << n0 << ' ' << p1 << ' ' << n1;
    }
}

TEST(Candidates, NumericThresholdAtClassBoundary) {
    const auto d = numeric_toy();
    const auto c = candidate_conditions(d);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0], Condition::less_equal(0, 2.5));
    EXPECT_EQ(c[1], Condition::greater(0, 2.5));
}

TEST(Candidates, NoThresholdWithinOneClass) {
    Dataset d(Schema({Attribute::numeric("x")}), "class", {"yes", "no"});
    for (double v : {1.0, 2.0, 5.0}) d.push_back(std::vector<double>{v}, Label::positive);
    EXPECT_TRUE(candidate_conditions(d).empty());
}

TEST(Candidates, ThirtySixForKrk) {
    const auto d = krk::generate(500, 1);
    const auto c = candidate_conditions(d);
    EXPECT_EQ(c.size(), 36u);
    Rule r({c.front()});
    EXPECT_EQ(candidate_conditions(d, r).size(), 35u);
}

TEST(Candidates, CoverageMatchesDirectCount) {
    for (Seed s = 0; s < 50; ++s) {
        const auto d = test_support::random_dataset(s, 80);
        IndexList pos, neg;
        auto all = d.all_indices();
        split_by_label(d, all, pos, neg);
        for (const auto& c : evaluate_candidates(d, pos, neg, Rule{}))
            EXPECT_EQ(c.stats, coverage(Rule({c.condition}), d));
    }
}

TEST(GrowRule, SeparableDataGivesOneConditionRule) {
    const auto d = separable();
    IndexList pos, neg;
    auto all = d.all_indices();
    split_by_label(d, all, pos, neg);
    const auto g = grow_rule_dos(d, pos, neg);
    ASSERT_EQ(g.rule.size(), 1u);
    EXPECT_EQ(g.rule.conditions()[0], Condition::equals(0, 1));
    EXPECT_TRUE(g.neg.empty());
    EXPECT_EQ(g.pos.size(), 10u);
}

TEST(GrowRule, ContradictionTerminatesWithNegativesLeft) {
    Dataset d(Schema({Attribute::symbolic("a", {"f", "t"})}), "class", {"yes", "no"});
    d.push_back(std::vector<double>{1}, Label::positive);
    d.push_back(std::vector<double>{1}, Label::negative);
    const IndexList pos{0}, neg{1};
    const auto g = grow_rule_dos(d, pos, neg);
    EXPECT_EQ(g.neg.size(), 1u);
    EXPECT_EQ(induce_dos(d).size(), 0u);
    EXPECT_THROW(grow_rule_dos(d, IndexList{}, neg), Error);
}

TEST(GrowRule, FirstKrkRuleIsUsuallyAHighCoverageBody) {
    const auto full = krk::enumeration();
    int high = 0;
    for (Seed s = 0; s < 10; ++s) {
        const auto d = krk::generate(1000, s);
        IndexList pos, neg;
        auto all = d.all_indices();
        split_by_label(d, all, pos, neg);
        const auto g = grow_rule_dos(d, pos, neg);
        const auto r = relational_rule_for(g.rule, full);
        high += r >= 3 && r <= 5;
    }
    EXPECT_GE(high, 8);
}

TEST(Dos, AllNegativeGivesEmptyTheory) {
    auto d = separable();
    for (ExampleIndex i = 0; i < d.size(); ++i) d.set_label(i, Label::negative);
    EXPECT_TRUE(induce_dos(d).empty());
}

TEST(Dos, ConsistentOnContradictionFreeData) {
    for (Seed s = 0; s < 20; ++s) {
        const auto d = krk::generate(300 + 50 * s, s);
        const auto t = induce_dos(d);
        EXPECT_EQ(accuracy(t, d), 1.0);
        for (const auto& r : t.rules) EXPECT_EQ(coverage(r, d).n, 0u);
    }
}

TEST(Dos, FullEnumerationIsLearnedExactly) {
    const auto full = krk::enumeration();
    EXPECT_EQ(accuracy(induce_dos(full), full), 1.0);
}

TEST(DosInvariant, DuplicatedDataGivesIdenticalTheory) {
    for (Seed s = 0; s < 10; ++s) {
        const auto d = krk::generate(400, s);
        Dataset twice = d;
        for (ExampleIndex i = 0; i < d.size(); ++i) twice.push_back(d.example(i));
        EXPECT_EQ(induce_dos(d), induce_dos(twice));
    }
}

TEST(Irip, SeparableDataGivesTheDosRule) {
    const auto d = separable();
    EXPECT_EQ(induce_irip(d, 3), induce_dos(d));
}

TEST(Irip, PureNoiseGivesAtMostATinyTheory) {
    for (Seed s = 0; s < 5; ++s) {
        const auto d = random_labels(1000, s);
        EXPECT_LE(induce_irip(d, s).size(), 1u) << "seed " << s;
    }
}

TEST(Irip, NoisyKrkStaysWellAboveDefaultAccuracy) {
    const auto full = krk::enumeration();
    const auto clean = krk::generate(5000, 21);
    const auto noisy = inject_noise(clean, {0.2, 22});
    const double acc = accuracy(induce_irip(noisy, 23), full);
    EXPECT_GT(acc, full.default_accuracy() + 0.2);
}

TEST(IripProperty, PruningNeverLowersPruningValue) {
    for (Seed s = 0; s < 50; ++s) {
        const auto d = inject_noise(krk::generate(600, s), {0.1, s});
        IndexList pos, neg;
        auto all = d.all_indices();
        auto [grow, prune] = random_partition(all, 400, s);
        split_by_label(d, grow, pos, neg);
        if (pos.empty()) continue;
        const Rule grown = grow_rule_dos(d, pos, neg).rule;
        const Rule pruned = prune_rule(d, grown, prune);
        EXPECT_GE(pruning_value(coverage(pruned, d, prune)), pruning_value(coverage(grown, d, prune)));
        for (const auto& c : pruned.conditions()) EXPECT_TRUE(grown.contains(c));
    }
}

TEST(IripDeterminism, SameSeedSameTheory) {
    const auto d = inject_noise(krk::generate(2000, 5), {0.1, 6});
    EXPECT_EQ(induce_irip(d, 9), induce_irip(d, 9));
}

TEST(Learners, RespectTheIndexSubset) {
    const auto d = krk::generate(1000, 4);
    auto [sub, rest] = sample_indices(d.size(), 300, 8);
    EXPECT_EQ(induce_dos(d, sub), induce_dos(d.subset(sub)));
    EXPECT_EQ(induce_irip(d, sub, 2), induce_irip(d.subset(sub), 2));
}
