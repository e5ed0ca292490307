#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

constexpr std::size_t trials = 1000;

void expect_clean(const properties::Outcome& o) {
    EXPECT_EQ(o.trials, trials);
    EXPECT_TRUE(o.ok()) << o.violations << " violation(s), first: " << o.first_failure;
    for (const auto& [label, n] : o.coverage) ::testing::Test::RecordProperty(label, static_cast<int>(n));
}

std::size_t count(const properties::Outcome& o, const std::string& label) {
    const auto it = o.coverage.find(label);
    return it == o.coverage.end() ? 0 : it->second;
}

TEST(Properties, UnambiguityCriteriaAgree) {
    const auto o = properties::unambiguity_criteria(101, trials);
    expect_clean(o);
    EXPECT_GT(count(o, "unambiguous"), 100u);
    EXPECT_GT(count(o, "ambiguous"), 50u);
}

TEST(Properties, StrongDefinitionMatchesCharacterization) {
    const auto o = properties::strong_characterization(102, trials);
    expect_clean(o);
    EXPECT_GT(count(o, "strong"), 50u);
    EXPECT_GT(count(o, "not strong"), 50u);
}

TEST(Properties, ProductClassCharacterization) {
    const auto o = properties::product_class_characterization(103, trials);
    expect_clean(o);
    for (const char* cls : {"prefix", "suffix", "bifix"}) {
        EXPECT_GT(count(o, std::string(cls) + " holds"), 20u) << cls;
        EXPECT_GT(count(o, std::string(cls) + " fails"), 20u) << cls;
        EXPECT_GT(count(o, std::string("maximal ") + cls + " holds"), 0u) << cls;
    }
}

TEST(Properties, StrongPrefixCharacterization) {
    const auto o = properties::strong_prefix_characterization(104, trials);
    expect_clean(o);
    EXPECT_GT(count(o, "holds"), 50u);
    EXPECT_GT(count(o, "fails"), 50u);
    EXPECT_GT(count(o, "maximal holds"), 0u);
}

TEST(Properties, ReversalDuality) {
    const auto o = properties::reversal_duality(105, trials);
    expect_clean(o);
    EXPECT_GT(count(o, "alt-induced"), 100u);
    EXPECT_GT(count(o, "not alt-induced"), 50u);
}

TEST(Properties, KraftMultiplicativity) {
    const auto o = properties::kraft_multiplicativity(106, trials);
    expect_clean(o);
    EXPECT_GT(count(o, "checked"), 200u);
}

}  // namespace
