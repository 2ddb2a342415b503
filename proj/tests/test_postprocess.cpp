#include <gtest/gtest.h>

#include "support.hpp"
#include "winrule/winrule.hpp"

using namespace winrule;

namespace {

Condition krk_true(const char* name) { return Condition::equals(krk::schema().index_of(name), 1); }

Rule random_rule(const Schema& schema, Rng& rng) {
    Rule r;
    for (std::size_t k = rng() % 3; k > 0; --k) {
        const std::size_t a = rng() % schema.size();
        r.add(Condition::equals(a, static_cast<int>(rng() % schema[a].values.size())));
    }
    return r;
}

}  // namespace

TEST(RemoveRedundant, KingsOnSameSquareGivesWayToAdjacentKings) {
    const Rule same({krk_true("eq_wk_file_bk_file"), krk_true("eq_wk_rank_bk_rank")});
    const Rule adjacent({krk_true("adj_wk_file_bk_file"), krk_true("adj_wk_rank_bk_rank")});
    Theory t;
    t.add(same);
    t.add(adjacent);
    const auto full = krk::enumeration();
    const auto out = remove_redundant_rules(t, full);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out.rules[0], adjacent);
}

TEST(RemoveRedundant, SingleRuleUnchanged) {
    Theory t;
    t.add(Rule({krk_true("eq_wk_file_wr_file")}));
    EXPECT_EQ(remove_redundant_rules(t, krk::generate(200, 1)), t);
}

TEST(RemoveRedundant, RuleCoveredByUnionOfTwoOthers) {
    Schema s({Attribute::symbolic("a", {"f", "t"}), Attribute::symbolic("b", {"f", "t"}),
              Attribute::symbolic("c", {"f", "t"})});
    Dataset d(s, "class", {"yes", "no"});
    // Every boolean vector except a=t with b=f, c=f: rule a=t then covers
    // only examples that b=t or c=t also cover.
    for (int v = 0; v < 8; ++v) {
        const int a = v & 1, b = (v >> 1) & 1, c = (v >> 2) & 1;
        if (a && !b && !c) continue;
        d.push_back(std::vector<double>{double(a), double(b), double(c)},
                    (a || b || c) ? Label::positive : Label::negative);
    }
    const Rule ra({Condition::equals(0, 1)}), rb({Condition::equals(1, 1)}), rc({Condition::equals(2, 1)});
    // Coverage sizes: a 3, b 4, c 4; a is visited first and every example it covers has another cover.
    EXPECT_EQ(coverage(ra, d).total(), 3u);
    for (ExampleIndex i = 0; i < d.size(); ++i)
        if (ra.covers(d[i].values)) EXPECT_TRUE(rb.covers(d[i].values) || rc.covers(d[i].values));
    Theory t;
    t.add(rb);
    t.add(ra);
    t.add(rc);
    Theory expected;
    expected.add(rb);
    expected.add(rc);
    EXPECT_EQ(remove_redundant_rules(t, d), expected);
}

TEST(RemoveRedundant, DeletionsAreVisibleToLaterChecks) {
    // Two identical-coverage rules: exactly one survives.
    Schema s({Attribute::symbolic("a", {"f", "t"}), Attribute::symbolic("b", {"f", "t"})});
    Dataset d(s, "class", {"yes", "no"});
    d.push_back(std::vector<double>{1, 1}, Label::positive);
    d.push_back(std::vector<double>{0, 0}, Label::negative);
    Theory t;
    t.add(Rule({Condition::equals(0, 1)}));
    t.add(Rule({Condition::equals(1, 1)}));
    const auto out = remove_redundant_rules(t, d);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out.rules[0], t.rules[1]);
}

TEST(RemoveRedundantProperty, ClassificationIdempotenceAndSize) {
    for (Seed s = 0; s < 300; ++s) {
        const auto d = test_support::random_dataset(s, 80, true);
        Rng rng(s);
        Theory t;
        for (std::size_t k = rng() % 6; k > 0; --k) t.add(random_rule(d.schema(), rng));
        const auto once = remove_redundant_rules(t, d);
        EXPECT_LE(once.size(), t.size());
        for (ExampleIndex i = 0; i < d.size(); ++i) EXPECT_EQ(classify(once, d[i]), classify(t, d[i]));
        EXPECT_EQ(remove_redundant_rules(once, d), once);
        for (const auto& r : once.rules) EXPECT_TRUE(t.contains(r));
    }
}
