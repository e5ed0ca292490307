#include <gtest/gtest.h>

#include <random>

#include "altcodes/code_check.hpp"
#include "altcodes/generate.hpp"
#include "altcodes/oracle.hpp"
#include "support.hpp"

using namespace altcodes;

namespace {

const FiniteLanguage noncode{"aaaa", "aaaab", "baaaa", "baaaab"};

TEST(SardinasPatterson, TraceOfTwoWordCode) {
    const SpTrace t = sardinas_patterson(FiniteLanguage{"abb", "abbab"});
    EXPECT_TRUE(t.is_code());
    EXPECT_EQ(t.halting_reason, SpHalt::EmptySetReached);
    ASSERT_EQ(t.u_sets.size(), 3u);
    EXPECT_EQ(t.u_sets[0], (FiniteLanguage{"ab"}));
    EXPECT_EQ(t.u_sets[1], (FiniteLanguage{"b", "bab"}));
    EXPECT_TRUE(t.u_sets[2].empty());
}

TEST(SardinasPatterson, NonCode) {
    const SpTrace t = sardinas_patterson(noncode);
    EXPECT_FALSE(t.is_code());
    EXPECT_EQ(t.halting_reason, SpHalt::EpsilonFound);
    EXPECT_TRUE(t.u_sets.back().contains_empty_word());
}

TEST(SardinasPatterson, PrefixCodeHasEmptyFirstSet) {
    const SpTrace t = sardinas_patterson(FiniteLanguage{"aa", "ab"});
    EXPECT_TRUE(t.is_code());
    ASSERT_EQ(t.u_sets.size(), 1u);
    EXPECT_TRUE(t.u_sets[0].empty());
}

TEST(SardinasPatterson, CycleDetection) {
    // {a, ab, bb}: U_n = {b} forever.
    const SpTrace t = sardinas_patterson(FiniteLanguage{"a", "ab", "bb"});
    EXPECT_TRUE(t.is_code());
    EXPECT_EQ(t.halting_reason, SpHalt::CycleDetected);
}

TEST(SardinasPatterson, ContractViolations) {
    EXPECT_THROW(sardinas_patterson(FiniteLanguage{}), contract_violation);
    EXPECT_THROW(sardinas_patterson(FiniteLanguage{"", "a"}), contract_violation);
}

TEST(AmbiguityWitness, ShortestForExampleNonCode) {
    const AmbiguityWitness w = ambiguity_witness(noncode);
    EXPECT_TRUE(is_valid_witness(w, noncode));
    EXPECT_EQ(w.word, "aaaabaaaa");
    // A longer hand-found witness is valid too.
    const AmbiguityWitness longer{"aaaabaaaab", {"aaaa", "baaaab"}, {"aaaab", "aaaab"}};
    EXPECT_TRUE(is_valid_witness(longer, noncode));
}

TEST(AmbiguityWitness, SmallCases) {
    const FiniteLanguage x{"a", "aa"};
    const AmbiguityWitness w = ambiguity_witness(x);
    EXPECT_EQ(w.word, "aa");
    EXPECT_TRUE(is_valid_witness(w, x));

    const FiniteLanguage slice{"abba", "abbaa", "aabba"};
    const AmbiguityWitness s = ambiguity_witness(slice);
    EXPECT_EQ(s.word, "abbaaabba");
    EXPECT_TRUE(is_valid_witness(s, slice));
}

TEST(AmbiguityWitness, RejectsCodes) {
    EXPECT_THROW(ambiguity_witness(FiniteLanguage{"ab", "ba"}), contract_violation);
}

TEST(CodeClasses, Examples) {
    EXPECT_TRUE(is_prefix_code(FiniteLanguage{"aa", "ab", "baa", "bab"}));
    EXPECT_TRUE(is_suffix_code(FiniteLanguage{"ab", "abbb", "bba"}));
    EXPECT_FALSE(is_prefix_code(FiniteLanguage{"ab", "abba"}));
    EXPECT_TRUE(is_bifix_code(FiniteLanguage{"ab", "ba"}));
    EXPECT_THROW(is_prefix_code(FiniteLanguage{}), contract_violation);
    EXPECT_THROW(is_suffix_code(FiniteLanguage{"", "a"}), contract_violation);
}

TEST(CodeClasses, Maximality) {
    EXPECT_TRUE(is_maximal_prefix(FiniteLanguage{"a", "b"}));
    EXPECT_FALSE(is_maximal_prefix(FiniteLanguage{"aa", "ab", "baa", "bab"}));
    EXPECT_TRUE(is_maximal_bifix(FiniteLanguage{"aa", "ab", "ba", "bb"}));
    EXPECT_THROW(is_maximal_prefix(FiniteLanguage{"a", "ab"}), contract_violation);
    EXPECT_THROW(is_maximal_suffix(FiniteLanguage{"a", "ba"}), contract_violation);
    EXPECT_THROW(is_maximal_bifix(FiniteLanguage{"a", "ab"}), contract_violation);
}

TEST(CodeClasses, Thin) {
    EXPECT_TRUE(is_thin(FiniteLanguage{}));
    EXPECT_TRUE(is_thin(noncode));
    EXPECT_TRUE(is_thin(FiniteLanguage{"ab", "ba"}));
}

TEST(CodeClasses, ClassifyReport) {
    const CodeClassReport r = classify_code(FiniteLanguage{"aa", "ab", "ba", "bb"});
    EXPECT_TRUE(r.is_code && r.is_prefix && r.is_suffix && r.is_bifix);
    EXPECT_TRUE(r.is_maximal_prefix && r.is_maximal_suffix && r.is_maximal_bifix);
    EXPECT_FALSE(r.witness);

    const CodeClassReport n = classify_code(noncode);
    EXPECT_FALSE(n.is_code);
    ASSERT_TRUE(n.witness);
    EXPECT_TRUE(is_valid_witness(*n.witness, noncode));
}

TEST(CodeCheckProperties, AgreesWithNaiveSearchAndClassInvariants) {
    std::mt19937_64 rng(5);
    const std::string letters[] = {"ab", "abc"};
    int noncodes = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const auto x = testing_support::random_language(rng, letters[trial % 2], 4, 4);
        const SpTrace t = sardinas_patterson(x);
        const auto [naive_code, naive_witness] = naive_code_check(x, naive_code_check_bound(x));
        ASSERT_EQ(t.is_code(), naive_code) << x;

        for (const auto& u : t.u_sets)
            for (const auto& r : u) EXPECT_TRUE(proper_suffixes(x).contains(r) || x.contains(r) || r.empty());

        const CodeClassReport c = classify_code(x);
        EXPECT_EQ(c.is_bifix, c.is_prefix && c.is_suffix);
        EXPECT_EQ(c.is_maximal_bifix, c.is_maximal_prefix && c.is_maximal_suffix);
        EXPECT_EQ(c.witness.has_value(), !c.is_code);
        if (c.is_prefix || c.is_suffix) {
            EXPECT_TRUE(c.is_code);
        }
        EXPECT_EQ(is_prefix_code(x), is_suffix_code(reverse(x)));
        if (c.is_prefix) {
            EXPECT_EQ(is_maximal_prefix(x), is_maximal_suffix(reverse(x)));
        }

        if (t.is_code()) {
            for (std::size_t n = 2; n <= 3; ++n) EXPECT_TRUE(is_code(power(x, n))) << x;
        } else {
            ++noncodes;
            const AmbiguityWitness w = ambiguity_witness(x);
            EXPECT_TRUE(is_valid_witness(w, x));
            ASSERT_TRUE(naive_witness);
            EXPECT_EQ(w.word.size(), naive_witness->word.size()) << x;
        }
    }
    EXPECT_GT(noncodes, 50);
}

TEST(CodeCheckProperties, PrefixClosureUnderProduct) {
    std::mt19937_64 rng(9);
    const Alphabet ab{'a', 'b'};
    for (int trial = 0; trial < 300; ++trial) {
        const auto x = random_prefix_code(rng, ab, 1 + uniform_below(rng, 4), 3);
        const auto y = random_prefix_code(rng, ab, 1 + uniform_below(rng, 4), 3);
        EXPECT_TRUE(is_prefix_code(product(x, y)));

        const auto p = testing_support::random_language(rng, "ab", 3, 3);
        const auto q = testing_support::random_language(rng, "ab", 3, 3);
        const auto pq = product(p, q);
        if (is_prefix_code(pq)) {
            EXPECT_TRUE(is_prefix_code(q));
        }
        if (is_suffix_code(pq)) {
            EXPECT_TRUE(is_suffix_code(p));
        }
    }
}

}  // namespace
