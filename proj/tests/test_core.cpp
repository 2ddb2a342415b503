#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "winrule/winrule.hpp"

using namespace winrule;

namespace {

Schema toy_schema() {
    return Schema({Attribute::symbolic("color", {"red", "green"}), Attribute::numeric("x")});
}

Dataset toy(std::size_t pos, std::size_t neg) {
    Dataset d(toy_schema(), "class", {"yes", "no"});
    for (std::size_t i = 0; i < pos; ++i) d.push_back(std::vector<double>{0, double(i)}, Label::positive);
    for (std::size_t i = 0; i < neg; ++i) d.push_back(std::vector<double>{1, double(i)}, Label::negative);
    return d;
}

std::size_t attr(const char* name) { return krk::schema().index_of(name); }

Condition is_true(const char* name) { return Condition::equals(attr(name), 1); }
Condition is_false(const char* name) { return Condition::equals(attr(name), 0); }

// Reference theory over the 18 features. Rules 6 and 7 each need two rules
// because "between" is expressed with less-than features.
Theory krk_theory() {
    Theory t;
    t.add(Rule({is_true("eq_wk_file_wr_file"), is_true("eq_wk_rank_wr_rank")}));
    t.add(Rule({is_true("adj_wk_file_bk_file"), is_true("adj_wk_rank_bk_rank")}));
    t.add(Rule({is_true("eq_wr_file_bk_file"), is_false("eq_wk_file_wr_file")}));
    t.add(Rule({is_true("eq_wr_rank_bk_rank"), is_false("eq_wk_rank_wr_rank")}));
    t.add(Rule({is_true("eq_wr_file_bk_file"), is_true("lt_wk_rank_wr_rank"), is_true("lt_wk_rank_bk_rank")}));
    t.add(Rule({is_true("eq_wr_file_bk_file"), is_false("lt_wk_rank_wr_rank"), is_false("lt_wk_rank_bk_rank")}));
    t.add(Rule({is_true("eq_wr_rank_bk_rank"), is_true("lt_wk_file_wr_file"), is_true("lt_wk_file_bk_file")}));
    t.add(Rule({is_true("eq_wr_rank_bk_rank"), is_false("lt_wk_file_wr_file"), is_false("lt_wk_file_bk_file")}));
    return t;
}

Rule random_rule(const Schema& schema, Rng& rng, std::size_t max_len) {
    Rule r;
    const std::size_t len = rng() % (max_len + 1);
    for (std::size_t k = 0; k < len; ++k) {
        const std::size_t a = rng() % schema.size();
        if (schema[a].is_symbolic())
            r.add(Condition::equals(a, static_cast<int>(rng() % schema[a].values.size())));
        else if (rng() % 2)
            r.add(Condition::less_equal(a, double(int(rng() % 200) - 100)));
        else
            r.add(Condition::greater(a, double(int(rng() % 200) - 100)));
    }
    return r;
}

}  // namespace

TEST(Schema, RejectsDuplicateNamesAndBadDomains) {
    EXPECT_THROW(Schema({Attribute::numeric("a"), Attribute::numeric("a")}), SchemaError);
    EXPECT_THROW(Schema({Attribute::symbolic("a", {})}), SchemaError);
    EXPECT_THROW(Schema({Attribute::symbolic("a", {"x", "x"})}), SchemaError);
    EXPECT_EQ(toy_schema().index_of("x"), 1u);
}

TEST(Dataset, RejectsNonConformingRows) {
    Dataset d(toy_schema(), "class", {"yes", "no"});
    EXPECT_THROW(d.push_back(std::vector<double>{0}, Label::positive), SchemaError);
    EXPECT_THROW(d.push_back(std::vector<double>{2, 0}, Label::positive), SchemaError);
    EXPECT_THROW(d.push_back(std::vector<double>{0.5, 0}, Label::positive), SchemaError);
    d.push_back(std::vector<double>{1, -3.25}, Label::negative);
    EXPECT_EQ(d.size(), 1u);
    EXPECT_EQ(d.value(0, 1), -3.25);
}

TEST(Covers, EmptyRuleCoversEverything) {
    const auto d = toy(3, 3);
    for (ExampleIndex i = 0; i < d.size(); ++i) EXPECT_TRUE(covers(Rule{}, d[i]));
}

TEST(Covers, KingAndRookOnSameSquare) {
    const Rule r({is_true("eq_wk_file_wr_file"), is_true("eq_wk_rank_wr_rank")});
    const auto e = krk::encode({1, 1, 1, 1, 5, 5});
    EXPECT_TRUE(covers(r, e, krk::schema()));
    EXPECT_EQ(e.label, Label::positive);
}

TEST(Covers, ThresholdSemantics) {
    const Rule r({Condition::less_equal(1, 3.0)});
    EXPECT_FALSE(covers(r, Example{{0, 3.5}, Label::positive}, toy_schema()));
    EXPECT_TRUE(covers(r, Example{{0, 3.0}, Label::positive}, toy_schema()));
    EXPECT_TRUE(covers(Rule({Condition::greater(1, 3.0)}), Example{{0, 3.5}, Label::positive}, toy_schema()));
}

TEST(Covers, SchemaMismatchIsAnError) {
    EXPECT_THROW(covers(Rule({Condition::equals(5, 0)}), Example{{0, 1}, Label::positive}, toy_schema()),
                 SchemaError);
    EXPECT_THROW(covers(Rule({Condition::less_equal(0, 1)}), Example{{0, 1}, Label::positive}, toy_schema()),
                 SchemaError);
    EXPECT_THROW(covers(Rule{}, Example{{0}, Label::positive}, toy_schema()), SchemaError);
}

TEST(Rule, ConditionsAreASet) {
    Rule r;
    r.add(Condition::equals(0, 1));
    r.add(Condition::equals(0, 1));
    EXPECT_EQ(r.size(), 1u);
    EXPECT_EQ(r.without(0).size(), 0u);
}

TEST(Classify, EmptyTheoryIsNegativeAndEmptyRulePositive) {
    const Example e{{0, 1}, Label::positive};
    EXPECT_EQ(classify(Theory{}, e, toy_schema()), Label::negative);
    Theory t;
    t.add(Rule{});
    EXPECT_EQ(classify(t, e, toy_schema()), Label::positive);
}

TEST(Classify, LegalPositionFiresNoRule) {
    // WK a1, WR h8, BK c4
    const krk::Position p{1, 1, 8, 8, 3, 4};
    EXPECT_EQ(krk::first_rule(p), 0);
    const auto e = krk::encode(p);
    EXPECT_EQ(e.label, Label::negative);
    EXPECT_EQ(classify(krk_theory(), e, krk::schema()), Label::negative);
}

TEST(Coverage, CountsByLabel) {
    const auto d = toy(10, 5);
    EXPECT_EQ(coverage(Rule{}, d), (CoverageStats{10, 5}));
    EXPECT_EQ(coverage(Rule({Condition::less_equal(1, -1.0)}), d), (CoverageStats{0, 0}));
    const auto all = d.all_indices();
    EXPECT_EQ(coverage(Rule{}, d, all), (CoverageStats{10, 5}));
}

TEST(Coverage, KingAndRookSameSquareOverEnumeration) {
    const Rule r({is_true("eq_wk_file_wr_file"), is_true("eq_wk_rank_wr_rank")});
    EXPECT_EQ(coverage(r, krk::enumeration()).total(), 4096u);
}

TEST(Accuracy, Basics) {
    EXPECT_EQ(accuracy(Theory{}, toy(0, 7)), 1.0);
    EXPECT_EQ(accuracy(Theory{}, toy(7, 0)), 0.0);
    EXPECT_THROW(accuracy(Theory{}, toy(0, 0)), Error);
    const auto d = toy(2, 2);
    EXPECT_THROW(accuracy(Theory{}, d, IndexList{}), Error);
}

TEST(Accuracy, ReferenceTheoryIsCorrectOnEnumeration) {
    EXPECT_EQ(accuracy(krk_theory(), krk::enumeration()), 1.0);
}

TEST(CoreProperty, AddingConditionsNeverWidensCoverage) {
    for (Seed s = 0; s < 200; ++s) {
        const auto d = test_support::random_dataset(s, 100);
        Rng rng(s);
        const Rule base = random_rule(d.schema(), rng, 3);
        Rule refined = base;
        const Rule extra = random_rule(d.schema(), rng, 3);
        for (const auto& c : extra.conditions()) refined.add(c);
        const auto a = coverage(base, d), b = coverage(refined, d);
        EXPECT_LE(b.p, a.p);
        EXPECT_LE(b.n, a.n);
        for (ExampleIndex i = 0; i < d.size(); ++i)
            if (refined.covers(d[i].values)) EXPECT_TRUE(base.covers(d[i].values));
    }
}

TEST(CoreProperty, CoverageIsAdditiveOverDisjointSets) {
    for (Seed s = 0; s < 200; ++s) {
        const auto d = test_support::random_dataset(s, 100);
        Rng rng(s + 1000);
        const Rule r = random_rule(d.schema(), rng, 2);
        IndexList left, right;
        for (ExampleIndex i = 0; i < d.size(); ++i) (rng() % 2 ? left : right).push_back(i);
        EXPECT_EQ(coverage(r, d, left) + coverage(r, d, right), coverage(r, d));
    }
}

TEST(CoreProperty, ClassifyIsAnyRuleCovers) {
    for (Seed s = 0; s < 100; ++s) {
        const auto d = test_support::random_dataset(s, 60);
        Rng rng(s + 7);
        Theory t;
        for (std::size_t k = rng() % 4; k > 0; --k) t.add(random_rule(d.schema(), rng, 2));
        for (ExampleIndex i = 0; i < d.size(); ++i) {
            const bool any = std::any_of(t.rules.begin(), t.rules.end(),
                                         [&](const Rule& r) { return r.covers(d[i].values); });
            EXPECT_EQ(classify(t, d[i]) == Label::positive, any);
        }
    }
}

TEST(CoreProperty, AccuracyIgnoresExampleOrder) {
    for (Seed s = 0; s < 100; ++s) {
        const auto d = test_support::random_dataset(s, 80);
        if (d.empty()) continue;
        Rng rng(s + 3);
        Theory t;
        t.add(random_rule(d.schema(), rng, 2));
        auto order = d.all_indices();
        std::shuffle(order.begin(), order.end(), rng);
        EXPECT_EQ(accuracy(t, d), accuracy(t, d.subset(order)));
        EXPECT_EQ(accuracy(t, d), accuracy(t, d, order));
    }
}
