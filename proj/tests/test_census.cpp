#include "fmz/census.hpp"

#include <gtest/gtest.h>

using namespace fmz;

namespace {

Int total(const CensusResult& r) {
    Int n = 0;
    for (const auto& rec : r.records) n += rec.count;
    return n;
}

}  // namespace

TEST(Census, ExhaustiveDiag3HeightOne) {
    CensusOptions o;
    o.kind = JordanKind::Diag3;
    o.height = 1;
    auto r = run_census(o);
    EXPECT_EQ(r.requested, 6561u);
    EXPECT_EQ(r.processed, 6561u);
    EXPECT_FALSE(r.truncated);
    EXPECT_EQ(total(r), Int(6561));
    EXPECT_EQ(r.congruence_failures, 0u);
    EXPECT_TRUE(r.counterexamples.empty());
    for (const auto& rec : r.records) {
        EXPECT_EQ(quartic_reduced(rec.sample), rec.norm);
        EXPECT_EQ(label_key(classify_orbit(rec.sample)), label_key(rec.label));
    }
}

TEST(Census, ThreadCountDoesNotChangeTheResult) {
    CensusOptions o;
    o.kind = JordanKind::H3B;
    o.height = 2;
    o.samples = 3000;
    o.seed = 99;
    auto one = run_census(o);
    o.jobs = 4;
    auto four = run_census(o);
    ASSERT_EQ(one.records.size(), four.records.size());
    for (std::size_t i = 0; i < one.records.size(); ++i) {
        EXPECT_EQ(one.records[i].norm, four.records[i].norm);
        EXPECT_EQ(one.records[i].count, four.records[i].count);
        EXPECT_EQ(one.records[i].sample, four.records[i].sample);
    }
    EXPECT_EQ(total(one), Int(3000));
}

TEST(Census, LimitTruncates) {
    CensusOptions o;
    o.height = 1;
    o.max_elements = 100;
    auto r = run_census(o);
    EXPECT_TRUE(r.truncated);
    EXPECT_EQ(r.processed, 100u);
}

TEST(Census, LargeEnumerationsAreCapped) {
    CensusOptions o;
    o.kind = JordanKind::H3O;
    o.height = 1;
    o.max_elements = 500;
    auto r = run_census(o);
    EXPECT_TRUE(r.truncated);
    EXPECT_EQ(r.processed, 500u);
    EXPECT_EQ(total(r), Int(500));
}

TEST(Census, RejectsEmptyEnumeration) {
    CensusOptions o;
    o.height = 0;
    EXPECT_THROW(run_census(o), PreconditionError);
}
